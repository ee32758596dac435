fn main() {
    std::process::exit(rundiff::cli::main_with_args(std::env::args_os()));
}
