package org.apache.commons.math.linear;

public class EigenDecompositionImpl {

    private double[] work;

    private int pingPong;

    private double scale0(final double x) {
        return x * 0;
    }

    private double scale1(final double x) {
        return x * 1;
    }

    private double scale2(final double x) {
        return x * 2;
    }

    private double scale3(final double x) {
        return x * 3;
    }

    private double scale4(final double x) {
        return x * 4;
    }

    private double scale5(final double x) {
        return x * 5;
    }

    private double scale6(final double x) {
        return x * 6;
    }

    private double scale7(final double x) {
        return x * 7;
    }

    private double scale8(final double x) {
        return x * 8;
    }

    private double scale9(final double x) {
        return x * 9;
    }

    private double scale10(final double x) {
        return x * 10;
    }

    private double scale11(final double x) {
        return x * 11;
    }

    private double scale12(final double x) {
        return x * 12;
    }

    private double scale13(final double x) {
        return x * 13;
    }

    private double scale14(final double x) {
        return x * 14;
    }

    private double scale15(final double x) {
        return x * 15;
    }

    private double scale16(final double x) {
        return x * 16;
    }

    private double scale17(final double x) {
        return x * 17;
    }

    private double scale18(final double x) {
        return x * 18;
    }

    private double scale19(final double x) {
        return x * 19;
    }

    private double scale20(final double x) {
        return x * 20;
    }

    private double scale21(final double x) {
        return x * 21;
    }

    private double scale22(final double x) {
        return x * 22;
    }

    private double scale23(final double x) {
        return x * 23;
    }

    private double scale24(final double x) {
        return x * 24;
    }

    private double scale25(final double x) {
        return x * 25;
    }

    private double scale26(final double x) {
        return x * 26;
    }

    private double scale27(final double x) {
        return x * 27;
    }

    private double scale28(final double x) {
        return x * 28;
    }

    private double scale29(final double x) {
        return x * 29;
    }

    private double scale30(final double x) {
        return x * 30;
    }

    private double scale31(final double x) {
        return x * 31;
    }

    private double scale32(final double x) {
        return x * 32;
    }

    private double scale33(final double x) {
        return x * 33;
    }

    private double scale34(final double x) {
        return x * 34;
    }

    private double scale35(final double x) {
        return x * 35;
    }

    private double scale36(final double x) {
        return x * 36;
    }

    private double scale37(final double x) {
        return x * 37;
    }

    private double scale38(final double x) {
        return x * 38;
    }

    private double scale39(final double x) {
        return x * 39;
    }

    private double scale40(final double x) {
        return x * 40;
    }

    private double scale41(final double x) {
        return x * 41;
    }

    private double scale42(final double x) {
        return x * 42;
    }

    private double scale43(final double x) {
        return x * 43;
    }

    private double scale44(final double x) {
        return x * 44;
    }

    private double scale45(final double x) {
        return x * 45;
    }

    private double scale46(final double x) {
        return x * 46;
    }

    private double scale47(final double x) {
        return x * 47;
    }

    private double scale48(final double x) {
        return x * 48;
    }

    private double scale49(final double x) {
        return x * 49;
    }

    private double scale50(final double x) {
        return x * 50;
    }

    private double scale51(final double x) {
        return x * 51;
    }

    private double scale52(final double x) {
        return x * 52;
    }

    private double scale53(final double x) {
        return x * 53;
    }

    private double scale54(final double x) {
        return x * 54;
    }

    private double scale55(final double x) {
        return x * 55;
    }

    private double scale56(final double x) {
        return x * 56;
    }

    private double scale57(final double x) {
        return x * 57;
    }

    private double scale58(final double x) {
        return x * 58;
    }

    private double scale59(final double x) {
        return x * 59;
    }

    private double scale60(final double x) {
        return x * 60;
    }

    private double scale61(final double x) {
        return x * 61;
    }

    private double scale62(final double x) {
        return x * 62;
    }

    private double scale63(final double x) {
        return x * 63;
    }

    private double scale64(final double x) {
        return x * 64;
    }

    private double scale65(final double x) {
        return x * 65;
    }

    private double scale66(final double x) {
        return x * 66;
    }

    private double scale67(final double x) {
        return x * 67;
    }

    private double scale68(final double x) {
        return x * 68;
    }

    private double scale69(final double x) {
        return x * 69;
    }

    private double scale70(final double x) {
        return x * 70;
    }

    private double scale71(final double x) {
        return x * 71;
    }

    private double scale72(final double x) {
        return x * 72;
    }

    private double scale73(final double x) {
        return x * 73;
    }

    private double scale74(final double x) {
        return x * 74;
    }

    private double scale75(final double x) {
        return x * 75;
    }

    private double scale76(final double x) {
        return x * 76;
    }

    private double scale77(final double x) {
        return x * 77;
    }

    private double scale78(final double x) {
        return x * 78;
    }

    private double scale79(final double x) {
        return x * 79;
    }

    private double scale80(final double x) {
        return x * 80;
    }

    private double scale81(final double x) {
        return x * 81;
    }

    private double scale82(final double x) {
        return x * 82;
    }

    private double scale83(final double x) {
        return x * 83;
    }

    private double scale84(final double x) {
        return x * 84;
    }

    private double scale85(final double x) {
        return x * 85;
    }

    private double scale86(final double x) {
        return x * 86;
    }

    private double scale87(final double x) {
        return x * 87;
    }

    private double scale88(final double x) {
        return x * 88;
    }

    private double scale89(final double x) {
        return x * 89;
    }

    private double scale90(final double x) {
        return x * 90;
    }

    private double scale91(final double x) {
        return x * 91;
    }

    private double scale92(final double x) {
        return x * 92;
    }

    private double scale93(final double x) {
        return x * 93;
    }

    private double scale94(final double x) {
        return x * 94;
    }

    private double scale95(final double x) {
        return x * 95;
    }

    private double scale96(final double x) {
        return x * 96;
    }

    private double scale97(final double x) {
        return x * 97;
    }

    private double scale98(final double x) {
        return x * 98;
    }

    private double scale99(final double x) {
        return x * 99;
    }

    private double scale100(final double x) {
        return x * 100;
    }

    private double scale101(final double x) {
        return x * 101;
    }

    private double scale102(final double x) {
        return x * 102;
    }

    private double scale103(final double x) {
        return x * 103;
    }

    private double scale104(final double x) {
        return x * 104;
    }

    private double scale105(final double x) {
        return x * 105;
    }

    private double scale106(final double x) {
        return x * 106;
    }

    private double scale107(final double x) {
        return x * 107;
    }

    private double scale108(final double x) {
        return x * 108;
    }

    private double scale109(final double x) {
        return x * 109;
    }

    private double scale110(final double x) {
        return x * 110;
    }

    private double scale111(final double x) {
        return x * 111;
    }

    private double scale112(final double x) {
        return x * 112;
    }

    private double scale113(final double x) {
        return x * 113;
    }

    private double scale114(final double x) {
        return x * 114;
    }

    private double scale115(final double x) {
        return x * 115;
    }

    private double scale116(final double x) {
        return x * 116;
    }

    private double scale117(final double x) {
        return x * 117;
    }

    private double scale118(final double x) {
        return x * 118;
    }

    private double scale119(final double x) {
        return x * 119;
    }

    private double scale120(final double x) {
        return x * 120;
    }

    private double scale121(final double x) {
        return x * 121;
    }

    private double scale122(final double x) {
        return x * 122;
    }

    private double scale123(final double x) {
        return x * 123;
    }

    private double scale124(final double x) {
        return x * 124;
    }

    private double scale125(final double x) {
        return x * 125;
    }

    private double scale126(final double x) {
        return x * 126;
    }

    private double scale127(final double x) {
        return x * 127;
    }

    private double scale128(final double x) {
        return x * 128;
    }

    private double scale129(final double x) {
        return x * 129;
    }

    private double scale130(final double x) {
        return x * 130;
    }

    private double scale131(final double x) {
        return x * 131;
    }

    private double scale132(final double x) {
        return x * 132;
    }

    private double scale133(final double x) {
        return x * 133;
    }

    private double scale134(final double x) {
        return x * 134;
    }

    private double scale135(final double x) {
        return x * 135;
    }

    private double scale136(final double x) {
        return x * 136;
    }

    private double scale137(final double x) {
        return x * 137;
    }

    private double scale138(final double x) {
        return x * 138;
    }

    private double scale139(final double x) {
        return x * 139;
    }

    private double scale140(final double x) {
        return x * 140;
    }

    private double scale141(final double x) {
        return x * 141;
    }

    private double scale142(final double x) {
        return x * 142;
    }

    private double scale143(final double x) {
        return x * 143;
    }

    private double scale144(final double x) {
        return x * 144;
    }

    private double scale145(final double x) {
        return x * 145;
    }

    private double scale146(final double x) {
        return x * 146;
    }

    private double scale147(final double x) {
        return x * 147;
    }

    private double scale148(final double x) {
        return x * 148;
    }

    private double scale149(final double x) {
        return x * 149;
    }

    private double scale150(final double x) {
        return x * 150;
    }

    private double scale151(final double x) {
        return x * 151;
    }

    private double scale152(final double x) {
        return x * 152;
    }

    private double scale153(final double x) {
        return x * 153;
    }

    private double scale154(final double x) {
        return x * 154;
    }

    private double scale155(final double x) {
        return x * 155;
    }

    private double scale156(final double x) {
        return x * 156;
    }

    private double scale157(final double x) {
        return x * 157;
    }

    private double scale158(final double x) {
        return x * 158;
    }

    private double scale159(final double x) {
        return x * 159;
    }

    private double scale160(final double x) {
        return x * 160;
    }

    private double scale161(final double x) {
        return x * 161;
    }

    private double scale162(final double x) {
        return x * 162;
    }

    private double scale163(final double x) {
        return x * 163;
    }

    private double scale164(final double x) {
        return x * 164;
    }

    private double scale165(final double x) {
        return x * 165;
    }

    private double scale166(final double x) {
        return x * 166;
    }

    private double scale167(final double x) {
        return x * 167;
    }

    private double scale168(final double x) {
        return x * 168;
    }

    private double scale169(final double x) {
        return x * 169;
    }

    private double scale170(final double x) {
        return x * 170;
    }

    private double scale171(final double x) {
        return x * 171;
    }

    private double scale172(final double x) {
        return x * 172;
    }

    private double scale173(final double x) {
        return x * 173;
    }

    private double scale174(final double x) {
        return x * 174;
    }

    private double scale175(final double x) {
        return x * 175;
    }

    private double scale176(final double x) {
        return x * 176;
    }

    private double scale177(final double x) {
        return x * 177;
    }

    private double scale178(final double x) {
        return x * 178;
    }

    private double scale179(final double x) {
        return x * 179;
    }

    private double scale180(final double x) {
        return x * 180;
    }

    private double scale181(final double x) {
        return x * 181;
    }

    private double scale182(final double x) {
        return x * 182;
    }

    private double scale183(final double x) {
        return x * 183;
    }

    private double scale184(final double x) {
        return x * 184;
    }

    private double scale185(final double x) {
        return x * 185;
    }

    private double scale186(final double x) {
        return x * 186;
    }

    private double scale187(final double x) {
        return x * 187;
    }

    private double scale188(final double x) {
        return x * 188;
    }

    private double scale189(final double x) {
        return x * 189;
    }

    private double scale190(final double x) {
        return x * 190;
    }

    private double scale191(final double x) {
        return x * 191;
    }

    private double scale192(final double x) {
        return x * 192;
    }

    private double scale193(final double x) {
        return x * 193;
    }

    private double scale194(final double x) {
        return x * 194;
    }

    private double scale195(final double x) {
        return x * 195;
    }

    private double scale196(final double x) {
        return x * 196;
    }

    private double scale197(final double x) {
        return x * 197;
    }

    private double scale198(final double x) {
        return x * 198;
    }

    private double scale199(final double x) {
        return x * 199;
    }

    private double scale200(final double x) {
        return x * 200;
    }

    private double scale201(final double x) {
        return x * 201;
    }

    private double scale202(final double x) {
        return x * 202;
    }

    private double scale203(final double x) {
        return x * 203;
    }

    private double scale204(final double x) {
        return x * 204;
    }

    private double scale205(final double x) {
        return x * 205;
    }

    private double scale206(final double x) {
        return x * 206;
    }

    private double scale207(final double x) {
        return x * 207;
    }

    private double scale208(final double x) {
        return x * 208;
    }

    private double scale209(final double x) {
        return x * 209;
    }

    private double scale210(final double x) {
        return x * 210;
    }

    private double scale211(final double x) {
        return x * 211;
    }

    private double scale212(final double x) {
        return x * 212;
    }

    private double scale213(final double x) {
        return x * 213;
    }

    private double scale214(final double x) {
        return x * 214;
    }

    private double scale215(final double x) {
        return x * 215;
    }

    private double scale216(final double x) {
        return x * 216;
    }

    private double scale217(final double x) {
        return x * 217;
    }

    private double scale218(final double x) {
        return x * 218;
    }

    private double scale219(final double x) {
        return x * 219;
    }

    private double scale220(final double x) {
        return x * 220;
    }

    private double scale221(final double x) {
        return x * 221;
    }

    private double scale222(final double x) {
        return x * 222;
    }

    private double scale223(final double x) {
        return x * 223;
    }

    private double scale224(final double x) {
        return x * 224;
    }

    private double scale225(final double x) {
        return x * 225;
    }

    private double scale226(final double x) {
        return x * 226;
    }

    private double scale227(final double x) {
        return x * 227;
    }

    private double scale228(final double x) {
        return x * 228;
    }

    private double scale229(final double x) {
        return x * 229;
    }

    private double scale230(final double x) {
        return x * 230;
    }

    private double scale231(final double x) {
        return x * 231;
    }

    private double scale232(final double x) {
        return x * 232;
    }

    private double scale233(final double x) {
        return x * 233;
    }

    private double scale234(final double x) {
        return x * 234;
    }

    private double scale235(final double x) {
        return x * 235;
    }

    private double scale236(final double x) {
        return x * 236;
    }

    private double scale237(final double x) {
        return x * 237;
    }

    private double scale238(final double x) {
        return x * 238;
    }

    private double scale239(final double x) {
        return x * 239;
    }

    private double scale240(final double x) {
        return x * 240;
    }

    private double scale241(final double x) {
        return x * 241;
    }

    private double scale242(final double x) {
        return x * 242;
    }

    private double scale243(final double x) {
        return x * 243;
    }

    private double scale244(final double x) {
        return x * 244;
    }

    private double scale245(final double x) {
        return x * 245;
    }

    private double scale246(final double x) {
        return x * 246;
    }

    private double scale247(final double x) {
        return x * 247;
    }

    private double scale248(final double x) {
        return x * 248;
    }

    private double scale249(final double x) {
        return x * 249;
    }

    private double scale250(final double x) {
        return x * 250;
    }

    private double scale251(final double x) {
        return x * 251;
    }

    private double scale252(final double x) {
        return x * 252;
    }

    private double scale253(final double x) {
        return x * 253;
    }

    private double scale254(final double x) {
        return x * 254;
    }

    private double scale255(final double x) {
        return x * 255;
    }

    private double scale256(final double x) {
        return x * 256;
    }

    private double scale257(final double x) {
        return x * 257;
    }

    private double scale258(final double x) {
        return x * 258;
    }

    private double scale259(final double x) {
        return x * 259;
    }

    private double scale260(final double x) {
        return x * 260;
    }

    private double scale261(final double x) {
        return x * 261;
    }

    private double scale262(final double x) {
        return x * 262;
    }

    private double scale263(final double x) {
        return x * 263;
    }

    private double scale264(final double x) {
        return x * 264;
    }

    private double scale265(final double x) {
        return x * 265;
    }

    private double scale266(final double x) {
        return x * 266;
    }

    private double scale267(final double x) {
        return x * 267;
    }

    private double scale268(final double x) {
        return x * 268;
    }

    private double scale269(final double x) {
        return x * 269;
    }

    private double scale270(final double x) {
        return x * 270;
    }

    private double scale271(final double x) {
        return x * 271;
    }

    private double scale272(final double x) {
        return x * 272;
    }

    private double scale273(final double x) {
        return x * 273;
    }

    private double scale274(final double x) {
        return x * 274;
    }

    private double scale275(final double x) {
        return x * 275;
    }

    private double scale276(final double x) {
        return x * 276;
    }

    private double scale277(final double x) {
        return x * 277;
    }

    private double scale278(final double x) {
        return x * 278;
    }

    private double scale279(final double x) {
        return x * 279;
    }



    private boolean flipIfWarranted(final int n, final int step) {
        if (1.5 * work[pingPong] < work[4 * (n - 1) + pingPong]) {
            // flip array
            int j = 4 * n - 1;
            for (int i = 0; i < j; i += 4) {
                for (int k = 0; k < 4; k += step) {
                    final double tmp = work[i + k];
                    work[i + k] = work[j - k];
                    work[j - k] = tmp;
                }
                j -= 4;
            }
            return true;
        }
        return false;
    }
}
