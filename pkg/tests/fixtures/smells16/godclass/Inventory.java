package fx.godclass;

public class Inventory {
    private int total;

    public int step1(int base) {
        int s1_1 = base * 1 + 1;
        int s1_2 = s1_1 * 2 + 1;
        int s1_3 = s1_2 * 3 + 1;
        int s1_4 = s1_3 * 4 + 1;
        int s1_5 = s1_4 * 5 + 1;
        int s1_6 = s1_5 * 6 + 1;
        int s1_7 = s1_6 * 7 + 1;
        int s1_8 = s1_7 * 8 + 1;
        int s1_9 = s1_8 * 9 + 1;
        int s1_10 = s1_9 * 10 + 1;
        int s1_11 = s1_10 * 11 + 1;
        int s1_12 = s1_11 * 12 + 1;
        total = total + s1_12;
        return total;
    }

    public int step2(int base) {
        int s2_1 = base * 1 + 2;
        int s2_2 = s2_1 * 2 + 2;
        int s2_3 = s2_2 * 3 + 2;
        int s2_4 = s2_3 * 4 + 2;
        int s2_5 = s2_4 * 5 + 2;
        int s2_6 = s2_5 * 6 + 2;
        int s2_7 = s2_6 * 7 + 2;
        int s2_8 = s2_7 * 8 + 2;
        int s2_9 = s2_8 * 9 + 2;
        int s2_10 = s2_9 * 10 + 2;
        int s2_11 = s2_10 * 11 + 2;
        int s2_12 = s2_11 * 12 + 2;
        total = total + s2_12;
        return total;
    }

    public int step3(int base) {
        int s3_1 = base * 1 + 3;
        int s3_2 = s3_1 * 2 + 3;
        int s3_3 = s3_2 * 3 + 3;
        int s3_4 = s3_3 * 4 + 3;
        int s3_5 = s3_4 * 5 + 3;
        int s3_6 = s3_5 * 6 + 3;
        int s3_7 = s3_6 * 7 + 3;
        int s3_8 = s3_7 * 8 + 3;
        int s3_9 = s3_8 * 9 + 3;
        int s3_10 = s3_9 * 10 + 3;
        int s3_11 = s3_10 * 11 + 3;
        int s3_12 = s3_11 * 12 + 3;
        total = total + s3_12;
        return total;
    }

    public int step4(int base) {
        int s4_1 = base * 1 + 4;
        int s4_2 = s4_1 * 2 + 4;
        int s4_3 = s4_2 * 3 + 4;
        int s4_4 = s4_3 * 4 + 4;
        int s4_5 = s4_4 * 5 + 4;
        int s4_6 = s4_5 * 6 + 4;
        int s4_7 = s4_6 * 7 + 4;
        int s4_8 = s4_7 * 8 + 4;
        int s4_9 = s4_8 * 9 + 4;
        int s4_10 = s4_9 * 10 + 4;
        int s4_11 = s4_10 * 11 + 4;
        int s4_12 = s4_11 * 12 + 4;
        total = total + s4_12;
        return total;
    }

    public int step5(int base) {
        int s5_1 = base * 1 + 5;
        int s5_2 = s5_1 * 2 + 5;
        int s5_3 = s5_2 * 3 + 5;
        int s5_4 = s5_3 * 4 + 5;
        int s5_5 = s5_4 * 5 + 5;
        int s5_6 = s5_5 * 6 + 5;
        int s5_7 = s5_6 * 7 + 5;
        int s5_8 = s5_7 * 8 + 5;
        int s5_9 = s5_8 * 9 + 5;
        int s5_10 = s5_9 * 10 + 5;
        int s5_11 = s5_10 * 11 + 5;
        int s5_12 = s5_11 * 12 + 5;
        total = total + s5_12;
        return total;
    }

    public int step6(int base) {
        int s6_1 = base * 1 + 6;
        int s6_2 = s6_1 * 2 + 6;
        int s6_3 = s6_2 * 3 + 6;
        int s6_4 = s6_3 * 4 + 6;
        int s6_5 = s6_4 * 5 + 6;
        int s6_6 = s6_5 * 6 + 6;
        int s6_7 = s6_6 * 7 + 6;
        int s6_8 = s6_7 * 8 + 6;
        int s6_9 = s6_8 * 9 + 6;
        int s6_10 = s6_9 * 10 + 6;
        int s6_11 = s6_10 * 11 + 6;
        int s6_12 = s6_11 * 12 + 6;
        total = total + s6_12;
        return total;
    }

    public int step7(int base) {
        int s7_1 = base * 1 + 7;
        int s7_2 = s7_1 * 2 + 7;
        int s7_3 = s7_2 * 3 + 7;
        int s7_4 = s7_3 * 4 + 7;
        int s7_5 = s7_4 * 5 + 7;
        int s7_6 = s7_5 * 6 + 7;
        int s7_7 = s7_6 * 7 + 7;
        int s7_8 = s7_7 * 8 + 7;
        int s7_9 = s7_8 * 9 + 7;
        int s7_10 = s7_9 * 10 + 7;
        int s7_11 = s7_10 * 11 + 7;
        int s7_12 = s7_11 * 12 + 7;
        total = total + s7_12;
        return total;
    }

    public int step8(int base) {
        int s8_1 = base * 1 + 8;
        int s8_2 = s8_1 * 2 + 8;
        int s8_3 = s8_2 * 3 + 8;
        int s8_4 = s8_3 * 4 + 8;
        int s8_5 = s8_4 * 5 + 8;
        int s8_6 = s8_5 * 6 + 8;
        int s8_7 = s8_6 * 7 + 8;
        int s8_8 = s8_7 * 8 + 8;
        int s8_9 = s8_8 * 9 + 8;
        int s8_10 = s8_9 * 10 + 8;
        int s8_11 = s8_10 * 11 + 8;
        int s8_12 = s8_11 * 12 + 8;
        total = total + s8_12;
        return total;
    }

    public int step9(int base) {
        int s9_1 = base * 1 + 9;
        int s9_2 = s9_1 * 2 + 9;
        int s9_3 = s9_2 * 3 + 9;
        int s9_4 = s9_3 * 4 + 9;
        int s9_5 = s9_4 * 5 + 9;
        int s9_6 = s9_5 * 6 + 9;
        int s9_7 = s9_6 * 7 + 9;
        int s9_8 = s9_7 * 8 + 9;
        int s9_9 = s9_8 * 9 + 9;
        int s9_10 = s9_9 * 10 + 9;
        int s9_11 = s9_10 * 11 + 9;
        int s9_12 = s9_11 * 12 + 9;
        total = total + s9_12;
        return total;
    }

    public int step10(int base) {
        int s10_1 = base * 1 + 10;
        int s10_2 = s10_1 * 2 + 10;
        int s10_3 = s10_2 * 3 + 10;
        int s10_4 = s10_3 * 4 + 10;
        int s10_5 = s10_4 * 5 + 10;
        int s10_6 = s10_5 * 6 + 10;
        int s10_7 = s10_6 * 7 + 10;
        int s10_8 = s10_7 * 8 + 10;
        int s10_9 = s10_8 * 9 + 10;
        int s10_10 = s10_9 * 10 + 10;
        int s10_11 = s10_10 * 11 + 10;
        int s10_12 = s10_11 * 12 + 10;
        total = total + s10_12;
        return total;
    }

    public int step11(int base) {
        int s11_1 = base * 1 + 11;
        int s11_2 = s11_1 * 2 + 11;
        int s11_3 = s11_2 * 3 + 11;
        int s11_4 = s11_3 * 4 + 11;
        int s11_5 = s11_4 * 5 + 11;
        int s11_6 = s11_5 * 6 + 11;
        int s11_7 = s11_6 * 7 + 11;
        int s11_8 = s11_7 * 8 + 11;
        int s11_9 = s11_8 * 9 + 11;
        int s11_10 = s11_9 * 10 + 11;
        int s11_11 = s11_10 * 11 + 11;
        int s11_12 = s11_11 * 12 + 11;
        total = total + s11_12;
        return total;
    }

    public int step12(int base) {
        int s12_1 = base * 1 + 12;
        int s12_2 = s12_1 * 2 + 12;
        int s12_3 = s12_2 * 3 + 12;
        int s12_4 = s12_3 * 4 + 12;
        int s12_5 = s12_4 * 5 + 12;
        int s12_6 = s12_5 * 6 + 12;
        int s12_7 = s12_6 * 7 + 12;
        int s12_8 = s12_7 * 8 + 12;
        int s12_9 = s12_8 * 9 + 12;
        int s12_10 = s12_9 * 10 + 12;
        int s12_11 = s12_10 * 11 + 12;
        int s12_12 = s12_11 * 12 + 12;
        total = total + s12_12;
        return total;
    }

    public int step13(int base) {
        int s13_1 = base * 1 + 13;
        int s13_2 = s13_1 * 2 + 13;
        int s13_3 = s13_2 * 3 + 13;
        int s13_4 = s13_3 * 4 + 13;
        int s13_5 = s13_4 * 5 + 13;
        int s13_6 = s13_5 * 6 + 13;
        int s13_7 = s13_6 * 7 + 13;
        int s13_8 = s13_7 * 8 + 13;
        int s13_9 = s13_8 * 9 + 13;
        int s13_10 = s13_9 * 10 + 13;
        int s13_11 = s13_10 * 11 + 13;
        int s13_12 = s13_11 * 12 + 13;
        total = total + s13_12;
        return total;
    }

    public int step14(int base) {
        int s14_1 = base * 1 + 14;
        int s14_2 = s14_1 * 2 + 14;
        int s14_3 = s14_2 * 3 + 14;
        int s14_4 = s14_3 * 4 + 14;
        int s14_5 = s14_4 * 5 + 14;
        int s14_6 = s14_5 * 6 + 14;
        int s14_7 = s14_6 * 7 + 14;
        int s14_8 = s14_7 * 8 + 14;
        int s14_9 = s14_8 * 9 + 14;
        int s14_10 = s14_9 * 10 + 14;
        int s14_11 = s14_10 * 11 + 14;
        int s14_12 = s14_11 * 12 + 14;
        total = total + s14_12;
        return total;
    }

    public int step15(int base) {
        int s15_1 = base * 1 + 15;
        int s15_2 = s15_1 * 2 + 15;
        int s15_3 = s15_2 * 3 + 15;
        int s15_4 = s15_3 * 4 + 15;
        int s15_5 = s15_4 * 5 + 15;
        int s15_6 = s15_5 * 6 + 15;
        int s15_7 = s15_6 * 7 + 15;
        int s15_8 = s15_7 * 8 + 15;
        int s15_9 = s15_8 * 9 + 15;
        int s15_10 = s15_9 * 10 + 15;
        int s15_11 = s15_10 * 11 + 15;
        int s15_12 = s15_11 * 12 + 15;
        total = total + s15_12;
        return total;
    }

    public int step16(int base) {
        int s16_1 = base * 1 + 16;
        int s16_2 = s16_1 * 2 + 16;
        int s16_3 = s16_2 * 3 + 16;
        int s16_4 = s16_3 * 4 + 16;
        int s16_5 = s16_4 * 5 + 16;
        int s16_6 = s16_5 * 6 + 16;
        int s16_7 = s16_6 * 7 + 16;
        int s16_8 = s16_7 * 8 + 16;
        int s16_9 = s16_8 * 9 + 16;
        int s16_10 = s16_9 * 10 + 16;
        int s16_11 = s16_10 * 11 + 16;
        int s16_12 = s16_11 * 12 + 16;
        total = total + s16_12;
        return total;
    }

    public int step17(int base) {
        int s17_1 = base * 1 + 17;
        int s17_2 = s17_1 * 2 + 17;
        int s17_3 = s17_2 * 3 + 17;
        int s17_4 = s17_3 * 4 + 17;
        int s17_5 = s17_4 * 5 + 17;
        int s17_6 = s17_5 * 6 + 17;
        int s17_7 = s17_6 * 7 + 17;
        int s17_8 = s17_7 * 8 + 17;
        int s17_9 = s17_8 * 9 + 17;
        int s17_10 = s17_9 * 10 + 17;
        int s17_11 = s17_10 * 11 + 17;
        int s17_12 = s17_11 * 12 + 17;
        total = total + s17_12;
        return total;
    }

    public int step18(int base) {
        int s18_1 = base * 1 + 18;
        int s18_2 = s18_1 * 2 + 18;
        int s18_3 = s18_2 * 3 + 18;
        int s18_4 = s18_3 * 4 + 18;
        int s18_5 = s18_4 * 5 + 18;
        int s18_6 = s18_5 * 6 + 18;
        int s18_7 = s18_6 * 7 + 18;
        int s18_8 = s18_7 * 8 + 18;
        int s18_9 = s18_8 * 9 + 18;
        int s18_10 = s18_9 * 10 + 18;
        int s18_11 = s18_10 * 11 + 18;
        int s18_12 = s18_11 * 12 + 18;
        total = total + s18_12;
        return total;
    }

    public int step19(int base) {
        int s19_1 = base * 1 + 19;
        int s19_2 = s19_1 * 2 + 19;
        int s19_3 = s19_2 * 3 + 19;
        int s19_4 = s19_3 * 4 + 19;
        int s19_5 = s19_4 * 5 + 19;
        int s19_6 = s19_5 * 6 + 19;
        int s19_7 = s19_6 * 7 + 19;
        int s19_8 = s19_7 * 8 + 19;
        int s19_9 = s19_8 * 9 + 19;
        int s19_10 = s19_9 * 10 + 19;
        int s19_11 = s19_10 * 11 + 19;
        int s19_12 = s19_11 * 12 + 19;
        total = total + s19_12;
        return total;
    }

    public int step20(int base) {
        int s20_1 = base * 1 + 20;
        int s20_2 = s20_1 * 2 + 20;
        int s20_3 = s20_2 * 3 + 20;
        int s20_4 = s20_3 * 4 + 20;
        int s20_5 = s20_4 * 5 + 20;
        int s20_6 = s20_5 * 6 + 20;
        int s20_7 = s20_6 * 7 + 20;
        int s20_8 = s20_7 * 8 + 20;
        int s20_9 = s20_8 * 9 + 20;
        int s20_10 = s20_9 * 10 + 20;
        int s20_11 = s20_10 * 11 + 20;
        int s20_12 = s20_11 * 12 + 20;
        total = total + s20_12;
        return total;
    }

    public int step21(int base) {
        int s21_1 = base * 1 + 21;
        int s21_2 = s21_1 * 2 + 21;
        int s21_3 = s21_2 * 3 + 21;
        int s21_4 = s21_3 * 4 + 21;
        int s21_5 = s21_4 * 5 + 21;
        int s21_6 = s21_5 * 6 + 21;
        int s21_7 = s21_6 * 7 + 21;
        int s21_8 = s21_7 * 8 + 21;
        int s21_9 = s21_8 * 9 + 21;
        int s21_10 = s21_9 * 10 + 21;
        int s21_11 = s21_10 * 11 + 21;
        int s21_12 = s21_11 * 12 + 21;
        total = total + s21_12;
        return total;
    }

    public int step22(int base) {
        int s22_1 = base * 1 + 22;
        int s22_2 = s22_1 * 2 + 22;
        int s22_3 = s22_2 * 3 + 22;
        int s22_4 = s22_3 * 4 + 22;
        int s22_5 = s22_4 * 5 + 22;
        int s22_6 = s22_5 * 6 + 22;
        int s22_7 = s22_6 * 7 + 22;
        int s22_8 = s22_7 * 8 + 22;
        int s22_9 = s22_8 * 9 + 22;
        int s22_10 = s22_9 * 10 + 22;
        int s22_11 = s22_10 * 11 + 22;
        int s22_12 = s22_11 * 12 + 22;
        total = total + s22_12;
        return total;
    }

    public int step23(int base) {
        int s23_1 = base * 1 + 23;
        int s23_2 = s23_1 * 2 + 23;
        int s23_3 = s23_2 * 3 + 23;
        int s23_4 = s23_3 * 4 + 23;
        int s23_5 = s23_4 * 5 + 23;
        int s23_6 = s23_5 * 6 + 23;
        int s23_7 = s23_6 * 7 + 23;
        int s23_8 = s23_7 * 8 + 23;
        int s23_9 = s23_8 * 9 + 23;
        int s23_10 = s23_9 * 10 + 23;
        int s23_11 = s23_10 * 11 + 23;
        int s23_12 = s23_11 * 12 + 23;
        total = total + s23_12;
        return total;
    }

    public int step24(int base) {
        int s24_1 = base * 1 + 24;
        int s24_2 = s24_1 * 2 + 24;
        int s24_3 = s24_2 * 3 + 24;
        int s24_4 = s24_3 * 4 + 24;
        int s24_5 = s24_4 * 5 + 24;
        int s24_6 = s24_5 * 6 + 24;
        int s24_7 = s24_6 * 7 + 24;
        int s24_8 = s24_7 * 8 + 24;
        int s24_9 = s24_8 * 9 + 24;
        int s24_10 = s24_9 * 10 + 24;
        int s24_11 = s24_10 * 11 + 24;
        int s24_12 = s24_11 * 12 + 24;
        total = total + s24_12;
        return total;
    }

    public int step25(int base) {
        int s25_1 = base * 1 + 25;
        int s25_2 = s25_1 * 2 + 25;
        int s25_3 = s25_2 * 3 + 25;
        int s25_4 = s25_3 * 4 + 25;
        int s25_5 = s25_4 * 5 + 25;
        int s25_6 = s25_5 * 6 + 25;
        int s25_7 = s25_6 * 7 + 25;
        int s25_8 = s25_7 * 8 + 25;
        int s25_9 = s25_8 * 9 + 25;
        int s25_10 = s25_9 * 10 + 25;
        int s25_11 = s25_10 * 11 + 25;
        int s25_12 = s25_11 * 12 + 25;
        total = total + s25_12;
        return total;
    }

    public int step26(int base) {
        int s26_1 = base * 1 + 26;
        int s26_2 = s26_1 * 2 + 26;
        int s26_3 = s26_2 * 3 + 26;
        int s26_4 = s26_3 * 4 + 26;
        int s26_5 = s26_4 * 5 + 26;
        int s26_6 = s26_5 * 6 + 26;
        int s26_7 = s26_6 * 7 + 26;
        int s26_8 = s26_7 * 8 + 26;
        int s26_9 = s26_8 * 9 + 26;
        int s26_10 = s26_9 * 10 + 26;
        int s26_11 = s26_10 * 11 + 26;
        int s26_12 = s26_11 * 12 + 26;
        total = total + s26_12;
        return total;
    }

    public int step27(int base) {
        int s27_1 = base * 1 + 27;
        int s27_2 = s27_1 * 2 + 27;
        int s27_3 = s27_2 * 3 + 27;
        int s27_4 = s27_3 * 4 + 27;
        int s27_5 = s27_4 * 5 + 27;
        int s27_6 = s27_5 * 6 + 27;
        int s27_7 = s27_6 * 7 + 27;
        int s27_8 = s27_7 * 8 + 27;
        int s27_9 = s27_8 * 9 + 27;
        int s27_10 = s27_9 * 10 + 27;
        int s27_11 = s27_10 * 11 + 27;
        int s27_12 = s27_11 * 12 + 27;
        total = total + s27_12;
        return total;
    }

    public int step28(int base) {
        int s28_1 = base * 1 + 28;
        int s28_2 = s28_1 * 2 + 28;
        int s28_3 = s28_2 * 3 + 28;
        int s28_4 = s28_3 * 4 + 28;
        int s28_5 = s28_4 * 5 + 28;
        int s28_6 = s28_5 * 6 + 28;
        int s28_7 = s28_6 * 7 + 28;
        int s28_8 = s28_7 * 8 + 28;
        int s28_9 = s28_8 * 9 + 28;
        int s28_10 = s28_9 * 10 + 28;
        int s28_11 = s28_10 * 11 + 28;
        int s28_12 = s28_11 * 12 + 28;
        total = total + s28_12;
        return total;
    }

    public int step29(int base) {
        int s29_1 = base * 1 + 29;
        int s29_2 = s29_1 * 2 + 29;
        int s29_3 = s29_2 * 3 + 29;
        int s29_4 = s29_3 * 4 + 29;
        int s29_5 = s29_4 * 5 + 29;
        int s29_6 = s29_5 * 6 + 29;
        int s29_7 = s29_6 * 7 + 29;
        int s29_8 = s29_7 * 8 + 29;
        int s29_9 = s29_8 * 9 + 29;
        int s29_10 = s29_9 * 10 + 29;
        int s29_11 = s29_10 * 11 + 29;
        int s29_12 = s29_11 * 12 + 29;
        total = total + s29_12;
        return total;
    }

    public int step30(int base) {
        int s30_1 = base * 1 + 30;
        int s30_2 = s30_1 * 2 + 30;
        int s30_3 = s30_2 * 3 + 30;
        int s30_4 = s30_3 * 4 + 30;
        int s30_5 = s30_4 * 5 + 30;
        int s30_6 = s30_5 * 6 + 30;
        int s30_7 = s30_6 * 7 + 30;
        int s30_8 = s30_7 * 8 + 30;
        int s30_9 = s30_8 * 9 + 30;
        int s30_10 = s30_9 * 10 + 30;
        int s30_11 = s30_10 * 11 + 30;
        int s30_12 = s30_11 * 12 + 30;
        total = total + s30_12;
        return total;
    }

    public int step31(int base) {
        int s31_1 = base * 1 + 31;
        int s31_2 = s31_1 * 2 + 31;
        int s31_3 = s31_2 * 3 + 31;
        int s31_4 = s31_3 * 4 + 31;
        int s31_5 = s31_4 * 5 + 31;
        int s31_6 = s31_5 * 6 + 31;
        int s31_7 = s31_6 * 7 + 31;
        int s31_8 = s31_7 * 8 + 31;
        int s31_9 = s31_8 * 9 + 31;
        int s31_10 = s31_9 * 10 + 31;
        int s31_11 = s31_10 * 11 + 31;
        int s31_12 = s31_11 * 12 + 31;
        total = total + s31_12;
        return total;
    }

    public int step32(int base) {
        int s32_1 = base * 1 + 32;
        int s32_2 = s32_1 * 2 + 32;
        int s32_3 = s32_2 * 3 + 32;
        int s32_4 = s32_3 * 4 + 32;
        int s32_5 = s32_4 * 5 + 32;
        int s32_6 = s32_5 * 6 + 32;
        int s32_7 = s32_6 * 7 + 32;
        int s32_8 = s32_7 * 8 + 32;
        int s32_9 = s32_8 * 9 + 32;
        int s32_10 = s32_9 * 10 + 32;
        int s32_11 = s32_10 * 11 + 32;
        int s32_12 = s32_11 * 12 + 32;
        total = total + s32_12;
        return total;
    }

    public int step33(int base) {
        int s33_1 = base * 1 + 33;
        int s33_2 = s33_1 * 2 + 33;
        int s33_3 = s33_2 * 3 + 33;
        int s33_4 = s33_3 * 4 + 33;
        int s33_5 = s33_4 * 5 + 33;
        int s33_6 = s33_5 * 6 + 33;
        int s33_7 = s33_6 * 7 + 33;
        int s33_8 = s33_7 * 8 + 33;
        int s33_9 = s33_8 * 9 + 33;
        int s33_10 = s33_9 * 10 + 33;
        int s33_11 = s33_10 * 11 + 33;
        int s33_12 = s33_11 * 12 + 33;
        total = total + s33_12;
        return total;
    }

    public int step34(int base) {
        int s34_1 = base * 1 + 34;
        int s34_2 = s34_1 * 2 + 34;
        int s34_3 = s34_2 * 3 + 34;
        int s34_4 = s34_3 * 4 + 34;
        int s34_5 = s34_4 * 5 + 34;
        int s34_6 = s34_5 * 6 + 34;
        int s34_7 = s34_6 * 7 + 34;
        int s34_8 = s34_7 * 8 + 34;
        int s34_9 = s34_8 * 9 + 34;
        int s34_10 = s34_9 * 10 + 34;
        int s34_11 = s34_10 * 11 + 34;
        int s34_12 = s34_11 * 12 + 34;
        total = total + s34_12;
        return total;
    }

    public int step35(int base) {
        int s35_1 = base * 1 + 35;
        int s35_2 = s35_1 * 2 + 35;
        int s35_3 = s35_2 * 3 + 35;
        int s35_4 = s35_3 * 4 + 35;
        int s35_5 = s35_4 * 5 + 35;
        int s35_6 = s35_5 * 6 + 35;
        int s35_7 = s35_6 * 7 + 35;
        int s35_8 = s35_7 * 8 + 35;
        int s35_9 = s35_8 * 9 + 35;
        int s35_10 = s35_9 * 10 + 35;
        int s35_11 = s35_10 * 11 + 35;
        int s35_12 = s35_11 * 12 + 35;
        total = total + s35_12;
        return total;
    }

    public int step36(int base) {
        int s36_1 = base * 1 + 36;
        int s36_2 = s36_1 * 2 + 36;
        int s36_3 = s36_2 * 3 + 36;
        int s36_4 = s36_3 * 4 + 36;
        int s36_5 = s36_4 * 5 + 36;
        int s36_6 = s36_5 * 6 + 36;
        int s36_7 = s36_6 * 7 + 36;
        int s36_8 = s36_7 * 8 + 36;
        int s36_9 = s36_8 * 9 + 36;
        int s36_10 = s36_9 * 10 + 36;
        int s36_11 = s36_10 * 11 + 36;
        int s36_12 = s36_11 * 12 + 36;
        total = total + s36_12;
        return total;
    }

    public int step37(int base) {
        int s37_1 = base * 1 + 37;
        int s37_2 = s37_1 * 2 + 37;
        int s37_3 = s37_2 * 3 + 37;
        int s37_4 = s37_3 * 4 + 37;
        int s37_5 = s37_4 * 5 + 37;
        int s37_6 = s37_5 * 6 + 37;
        int s37_7 = s37_6 * 7 + 37;
        int s37_8 = s37_7 * 8 + 37;
        int s37_9 = s37_8 * 9 + 37;
        int s37_10 = s37_9 * 10 + 37;
        int s37_11 = s37_10 * 11 + 37;
        int s37_12 = s37_11 * 12 + 37;
        total = total + s37_12;
        return total;
    }

    public int step38(int base) {
        int s38_1 = base * 1 + 38;
        int s38_2 = s38_1 * 2 + 38;
        int s38_3 = s38_2 * 3 + 38;
        int s38_4 = s38_3 * 4 + 38;
        int s38_5 = s38_4 * 5 + 38;
        int s38_6 = s38_5 * 6 + 38;
        int s38_7 = s38_6 * 7 + 38;
        int s38_8 = s38_7 * 8 + 38;
        int s38_9 = s38_8 * 9 + 38;
        int s38_10 = s38_9 * 10 + 38;
        int s38_11 = s38_10 * 11 + 38;
        int s38_12 = s38_11 * 12 + 38;
        total = total + s38_12;
        return total;
    }

    public int step39(int base) {
        int s39_1 = base * 1 + 39;
        int s39_2 = s39_1 * 2 + 39;
        int s39_3 = s39_2 * 3 + 39;
        int s39_4 = s39_3 * 4 + 39;
        int s39_5 = s39_4 * 5 + 39;
        int s39_6 = s39_5 * 6 + 39;
        int s39_7 = s39_6 * 7 + 39;
        int s39_8 = s39_7 * 8 + 39;
        int s39_9 = s39_8 * 9 + 39;
        int s39_10 = s39_9 * 10 + 39;
        int s39_11 = s39_10 * 11 + 39;
        int s39_12 = s39_11 * 12 + 39;
        total = total + s39_12;
        return total;
    }

    public int step40(int base) {
        int s40_1 = base * 1 + 40;
        int s40_2 = s40_1 * 2 + 40;
        int s40_3 = s40_2 * 3 + 40;
        int s40_4 = s40_3 * 4 + 40;
        int s40_5 = s40_4 * 5 + 40;
        int s40_6 = s40_5 * 6 + 40;
        int s40_7 = s40_6 * 7 + 40;
        int s40_8 = s40_7 * 8 + 40;
        int s40_9 = s40_8 * 9 + 40;
        int s40_10 = s40_9 * 10 + 40;
        int s40_11 = s40_10 * 11 + 40;
        int s40_12 = s40_11 * 12 + 40;
        total = total + s40_12;
        return total;
    }

    public int step41(int base) {
        int s41_1 = base * 1 + 41;
        int s41_2 = s41_1 * 2 + 41;
        int s41_3 = s41_2 * 3 + 41;
        int s41_4 = s41_3 * 4 + 41;
        int s41_5 = s41_4 * 5 + 41;
        int s41_6 = s41_5 * 6 + 41;
        int s41_7 = s41_6 * 7 + 41;
        int s41_8 = s41_7 * 8 + 41;
        int s41_9 = s41_8 * 9 + 41;
        int s41_10 = s41_9 * 10 + 41;
        int s41_11 = s41_10 * 11 + 41;
        int s41_12 = s41_11 * 12 + 41;
        total = total + s41_12;
        return total;
    }

    public int step42(int base) {
        int s42_1 = base * 1 + 42;
        int s42_2 = s42_1 * 2 + 42;
        int s42_3 = s42_2 * 3 + 42;
        int s42_4 = s42_3 * 4 + 42;
        int s42_5 = s42_4 * 5 + 42;
        int s42_6 = s42_5 * 6 + 42;
        int s42_7 = s42_6 * 7 + 42;
        int s42_8 = s42_7 * 8 + 42;
        int s42_9 = s42_8 * 9 + 42;
        int s42_10 = s42_9 * 10 + 42;
        int s42_11 = s42_10 * 11 + 42;
        int s42_12 = s42_11 * 12 + 42;
        total = total + s42_12;
        return total;
    }

    public int step43(int base) {
        int s43_1 = base * 1 + 43;
        int s43_2 = s43_1 * 2 + 43;
        int s43_3 = s43_2 * 3 + 43;
        int s43_4 = s43_3 * 4 + 43;
        int s43_5 = s43_4 * 5 + 43;
        int s43_6 = s43_5 * 6 + 43;
        int s43_7 = s43_6 * 7 + 43;
        int s43_8 = s43_7 * 8 + 43;
        int s43_9 = s43_8 * 9 + 43;
        int s43_10 = s43_9 * 10 + 43;
        int s43_11 = s43_10 * 11 + 43;
        int s43_12 = s43_11 * 12 + 43;
        total = total + s43_12;
        return total;
    }

    public int step44(int base) {
        int s44_1 = base * 1 + 44;
        int s44_2 = s44_1 * 2 + 44;
        int s44_3 = s44_2 * 3 + 44;
        int s44_4 = s44_3 * 4 + 44;
        int s44_5 = s44_4 * 5 + 44;
        int s44_6 = s44_5 * 6 + 44;
        int s44_7 = s44_6 * 7 + 44;
        int s44_8 = s44_7 * 8 + 44;
        int s44_9 = s44_8 * 9 + 44;
        int s44_10 = s44_9 * 10 + 44;
        int s44_11 = s44_10 * 11 + 44;
        int s44_12 = s44_11 * 12 + 44;
        total = total + s44_12;
        return total;
    }

    public int step45(int base) {
        int s45_1 = base * 1 + 45;
        int s45_2 = s45_1 * 2 + 45;
        int s45_3 = s45_2 * 3 + 45;
        int s45_4 = s45_3 * 4 + 45;
        int s45_5 = s45_4 * 5 + 45;
        int s45_6 = s45_5 * 6 + 45;
        int s45_7 = s45_6 * 7 + 45;
        int s45_8 = s45_7 * 8 + 45;
        int s45_9 = s45_8 * 9 + 45;
        int s45_10 = s45_9 * 10 + 45;
        int s45_11 = s45_10 * 11 + 45;
        int s45_12 = s45_11 * 12 + 45;
        total = total + s45_12;
        return total;
    }

    public int step46(int base) {
        int s46_1 = base * 1 + 46;
        int s46_2 = s46_1 * 2 + 46;
        int s46_3 = s46_2 * 3 + 46;
        int s46_4 = s46_3 * 4 + 46;
        int s46_5 = s46_4 * 5 + 46;
        int s46_6 = s46_5 * 6 + 46;
        int s46_7 = s46_6 * 7 + 46;
        int s46_8 = s46_7 * 8 + 46;
        int s46_9 = s46_8 * 9 + 46;
        int s46_10 = s46_9 * 10 + 46;
        int s46_11 = s46_10 * 11 + 46;
        int s46_12 = s46_11 * 12 + 46;
        total = total + s46_12;
        return total;
    }

    public int step47(int base) {
        int s47_1 = base * 1 + 47;
        int s47_2 = s47_1 * 2 + 47;
        int s47_3 = s47_2 * 3 + 47;
        int s47_4 = s47_3 * 4 + 47;
        int s47_5 = s47_4 * 5 + 47;
        int s47_6 = s47_5 * 6 + 47;
        int s47_7 = s47_6 * 7 + 47;
        int s47_8 = s47_7 * 8 + 47;
        int s47_9 = s47_8 * 9 + 47;
        int s47_10 = s47_9 * 10 + 47;
        int s47_11 = s47_10 * 11 + 47;
        int s47_12 = s47_11 * 12 + 47;
        total = total + s47_12;
        return total;
    }

    public int step48(int base) {
        int s48_1 = base * 1 + 48;
        int s48_2 = s48_1 * 2 + 48;
        int s48_3 = s48_2 * 3 + 48;
        int s48_4 = s48_3 * 4 + 48;
        int s48_5 = s48_4 * 5 + 48;
        int s48_6 = s48_5 * 6 + 48;
        int s48_7 = s48_6 * 7 + 48;
        int s48_8 = s48_7 * 8 + 48;
        int s48_9 = s48_8 * 9 + 48;
        int s48_10 = s48_9 * 10 + 48;
        int s48_11 = s48_10 * 11 + 48;
        int s48_12 = s48_11 * 12 + 48;
        total = total + s48_12;
        return total;
    }

    public int step49(int base) {
        int s49_1 = base * 1 + 49;
        int s49_2 = s49_1 * 2 + 49;
        int s49_3 = s49_2 * 3 + 49;
        int s49_4 = s49_3 * 4 + 49;
        int s49_5 = s49_4 * 5 + 49;
        int s49_6 = s49_5 * 6 + 49;
        int s49_7 = s49_6 * 7 + 49;
        int s49_8 = s49_7 * 8 + 49;
        int s49_9 = s49_8 * 9 + 49;
        int s49_10 = s49_9 * 10 + 49;
        int s49_11 = s49_10 * 11 + 49;
        int s49_12 = s49_11 * 12 + 49;
        total = total + s49_12;
        return total;
    }

    public int step50(int base) {
        int s50_1 = base * 1 + 50;
        int s50_2 = s50_1 * 2 + 50;
        int s50_3 = s50_2 * 3 + 50;
        int s50_4 = s50_3 * 4 + 50;
        int s50_5 = s50_4 * 5 + 50;
        int s50_6 = s50_5 * 6 + 50;
        int s50_7 = s50_6 * 7 + 50;
        int s50_8 = s50_7 * 8 + 50;
        int s50_9 = s50_8 * 9 + 50;
        int s50_10 = s50_9 * 10 + 50;
        int s50_11 = s50_10 * 11 + 50;
        int s50_12 = s50_11 * 12 + 50;
        total = total + s50_12;
        return total;
    }

    public int step51(int base) {
        int s51_1 = base * 1 + 51;
        int s51_2 = s51_1 * 2 + 51;
        int s51_3 = s51_2 * 3 + 51;
        int s51_4 = s51_3 * 4 + 51;
        int s51_5 = s51_4 * 5 + 51;
        int s51_6 = s51_5 * 6 + 51;
        int s51_7 = s51_6 * 7 + 51;
        int s51_8 = s51_7 * 8 + 51;
        int s51_9 = s51_8 * 9 + 51;
        int s51_10 = s51_9 * 10 + 51;
        int s51_11 = s51_10 * 11 + 51;
        int s51_12 = s51_11 * 12 + 51;
        total = total + s51_12;
        return total;
    }

    public int step52(int base) {
        int s52_1 = base * 1 + 52;
        int s52_2 = s52_1 * 2 + 52;
        int s52_3 = s52_2 * 3 + 52;
        int s52_4 = s52_3 * 4 + 52;
        int s52_5 = s52_4 * 5 + 52;
        int s52_6 = s52_5 * 6 + 52;
        int s52_7 = s52_6 * 7 + 52;
        int s52_8 = s52_7 * 8 + 52;
        int s52_9 = s52_8 * 9 + 52;
        int s52_10 = s52_9 * 10 + 52;
        int s52_11 = s52_10 * 11 + 52;
        int s52_12 = s52_11 * 12 + 52;
        total = total + s52_12;
        return total;
    }

    public int step53(int base) {
        int s53_1 = base * 1 + 53;
        int s53_2 = s53_1 * 2 + 53;
        int s53_3 = s53_2 * 3 + 53;
        int s53_4 = s53_3 * 4 + 53;
        int s53_5 = s53_4 * 5 + 53;
        int s53_6 = s53_5 * 6 + 53;
        int s53_7 = s53_6 * 7 + 53;
        int s53_8 = s53_7 * 8 + 53;
        int s53_9 = s53_8 * 9 + 53;
        int s53_10 = s53_9 * 10 + 53;
        int s53_11 = s53_10 * 11 + 53;
        int s53_12 = s53_11 * 12 + 53;
        total = total + s53_12;
        return total;
    }

    public int step54(int base) {
        int s54_1 = base * 1 + 54;
        int s54_2 = s54_1 * 2 + 54;
        int s54_3 = s54_2 * 3 + 54;
        int s54_4 = s54_3 * 4 + 54;
        int s54_5 = s54_4 * 5 + 54;
        int s54_6 = s54_5 * 6 + 54;
        int s54_7 = s54_6 * 7 + 54;
        int s54_8 = s54_7 * 8 + 54;
        int s54_9 = s54_8 * 9 + 54;
        int s54_10 = s54_9 * 10 + 54;
        int s54_11 = s54_10 * 11 + 54;
        int s54_12 = s54_11 * 12 + 54;
        total = total + s54_12;
        return total;
    }

    public int step55(int base) {
        int s55_1 = base * 1 + 55;
        int s55_2 = s55_1 * 2 + 55;
        int s55_3 = s55_2 * 3 + 55;
        int s55_4 = s55_3 * 4 + 55;
        int s55_5 = s55_4 * 5 + 55;
        int s55_6 = s55_5 * 6 + 55;
        int s55_7 = s55_6 * 7 + 55;
        int s55_8 = s55_7 * 8 + 55;
        int s55_9 = s55_8 * 9 + 55;
        int s55_10 = s55_9 * 10 + 55;
        int s55_11 = s55_10 * 11 + 55;
        int s55_12 = s55_11 * 12 + 55;
        total = total + s55_12;
        return total;
    }

    public int step56(int base) {
        int s56_1 = base * 1 + 56;
        int s56_2 = s56_1 * 2 + 56;
        int s56_3 = s56_2 * 3 + 56;
        int s56_4 = s56_3 * 4 + 56;
        int s56_5 = s56_4 * 5 + 56;
        int s56_6 = s56_5 * 6 + 56;
        int s56_7 = s56_6 * 7 + 56;
        int s56_8 = s56_7 * 8 + 56;
        int s56_9 = s56_8 * 9 + 56;
        int s56_10 = s56_9 * 10 + 56;
        int s56_11 = s56_10 * 11 + 56;
        int s56_12 = s56_11 * 12 + 56;
        total = total + s56_12;
        return total;
    }

    public int step57(int base) {
        int s57_1 = base * 1 + 57;
        int s57_2 = s57_1 * 2 + 57;
        int s57_3 = s57_2 * 3 + 57;
        int s57_4 = s57_3 * 4 + 57;
        int s57_5 = s57_4 * 5 + 57;
        int s57_6 = s57_5 * 6 + 57;
        int s57_7 = s57_6 * 7 + 57;
        int s57_8 = s57_7 * 8 + 57;
        int s57_9 = s57_8 * 9 + 57;
        int s57_10 = s57_9 * 10 + 57;
        int s57_11 = s57_10 * 11 + 57;
        int s57_12 = s57_11 * 12 + 57;
        total = total + s57_12;
        return total;
    }

    public int step58(int base) {
        int s58_1 = base * 1 + 58;
        int s58_2 = s58_1 * 2 + 58;
        int s58_3 = s58_2 * 3 + 58;
        int s58_4 = s58_3 * 4 + 58;
        int s58_5 = s58_4 * 5 + 58;
        int s58_6 = s58_5 * 6 + 58;
        int s58_7 = s58_6 * 7 + 58;
        int s58_8 = s58_7 * 8 + 58;
        int s58_9 = s58_8 * 9 + 58;
        int s58_10 = s58_9 * 10 + 58;
        int s58_11 = s58_10 * 11 + 58;
        int s58_12 = s58_11 * 12 + 58;
        total = total + s58_12;
        return total;
    }

    public int step59(int base) {
        int s59_1 = base * 1 + 59;
        int s59_2 = s59_1 * 2 + 59;
        int s59_3 = s59_2 * 3 + 59;
        int s59_4 = s59_3 * 4 + 59;
        int s59_5 = s59_4 * 5 + 59;
        int s59_6 = s59_5 * 6 + 59;
        int s59_7 = s59_6 * 7 + 59;
        int s59_8 = s59_7 * 8 + 59;
        int s59_9 = s59_8 * 9 + 59;
        int s59_10 = s59_9 * 10 + 59;
        int s59_11 = s59_10 * 11 + 59;
        int s59_12 = s59_11 * 12 + 59;
        total = total + s59_12;
        return total;
    }

    public int step60(int base) {
        int s60_1 = base * 1 + 60;
        int s60_2 = s60_1 * 2 + 60;
        int s60_3 = s60_2 * 3 + 60;
        int s60_4 = s60_3 * 4 + 60;
        int s60_5 = s60_4 * 5 + 60;
        int s60_6 = s60_5 * 6 + 60;
        int s60_7 = s60_6 * 7 + 60;
        int s60_8 = s60_7 * 8 + 60;
        int s60_9 = s60_8 * 9 + 60;
        int s60_10 = s60_9 * 10 + 60;
        int s60_11 = s60_10 * 11 + 60;
        int s60_12 = s60_11 * 12 + 60;
        total = total + s60_12;
        return total;
    }

    public int step61(int base) {
        int s61_1 = base * 1 + 61;
        int s61_2 = s61_1 * 2 + 61;
        int s61_3 = s61_2 * 3 + 61;
        int s61_4 = s61_3 * 4 + 61;
        int s61_5 = s61_4 * 5 + 61;
        int s61_6 = s61_5 * 6 + 61;
        int s61_7 = s61_6 * 7 + 61;
        int s61_8 = s61_7 * 8 + 61;
        int s61_9 = s61_8 * 9 + 61;
        int s61_10 = s61_9 * 10 + 61;
        int s61_11 = s61_10 * 11 + 61;
        int s61_12 = s61_11 * 12 + 61;
        total = total + s61_12;
        return total;
    }

    public int step62(int base) {
        int s62_1 = base * 1 + 62;
        int s62_2 = s62_1 * 2 + 62;
        int s62_3 = s62_2 * 3 + 62;
        int s62_4 = s62_3 * 4 + 62;
        int s62_5 = s62_4 * 5 + 62;
        int s62_6 = s62_5 * 6 + 62;
        int s62_7 = s62_6 * 7 + 62;
        int s62_8 = s62_7 * 8 + 62;
        int s62_9 = s62_8 * 9 + 62;
        int s62_10 = s62_9 * 10 + 62;
        int s62_11 = s62_10 * 11 + 62;
        int s62_12 = s62_11 * 12 + 62;
        total = total + s62_12;
        return total;
    }

    public int step63(int base) {
        int s63_1 = base * 1 + 63;
        int s63_2 = s63_1 * 2 + 63;
        int s63_3 = s63_2 * 3 + 63;
        int s63_4 = s63_3 * 4 + 63;
        int s63_5 = s63_4 * 5 + 63;
        int s63_6 = s63_5 * 6 + 63;
        int s63_7 = s63_6 * 7 + 63;
        int s63_8 = s63_7 * 8 + 63;
        int s63_9 = s63_8 * 9 + 63;
        int s63_10 = s63_9 * 10 + 63;
        int s63_11 = s63_10 * 11 + 63;
        int s63_12 = s63_11 * 12 + 63;
        total = total + s63_12;
        return total;
    }

    public int step64(int base) {
        int s64_1 = base * 1 + 64;
        int s64_2 = s64_1 * 2 + 64;
        int s64_3 = s64_2 * 3 + 64;
        int s64_4 = s64_3 * 4 + 64;
        int s64_5 = s64_4 * 5 + 64;
        int s64_6 = s64_5 * 6 + 64;
        int s64_7 = s64_6 * 7 + 64;
        int s64_8 = s64_7 * 8 + 64;
        int s64_9 = s64_8 * 9 + 64;
        int s64_10 = s64_9 * 10 + 64;
        int s64_11 = s64_10 * 11 + 64;
        int s64_12 = s64_11 * 12 + 64;
        total = total + s64_12;
        return total;
    }

    public int step65(int base) {
        int s65_1 = base * 1 + 65;
        int s65_2 = s65_1 * 2 + 65;
        int s65_3 = s65_2 * 3 + 65;
        int s65_4 = s65_3 * 4 + 65;
        int s65_5 = s65_4 * 5 + 65;
        int s65_6 = s65_5 * 6 + 65;
        int s65_7 = s65_6 * 7 + 65;
        int s65_8 = s65_7 * 8 + 65;
        int s65_9 = s65_8 * 9 + 65;
        int s65_10 = s65_9 * 10 + 65;
        int s65_11 = s65_10 * 11 + 65;
        int s65_12 = s65_11 * 12 + 65;
        total = total + s65_12;
        return total;
    }

    public int step66(int base) {
        int s66_1 = base * 1 + 66;
        int s66_2 = s66_1 * 2 + 66;
        int s66_3 = s66_2 * 3 + 66;
        int s66_4 = s66_3 * 4 + 66;
        int s66_5 = s66_4 * 5 + 66;
        int s66_6 = s66_5 * 6 + 66;
        int s66_7 = s66_6 * 7 + 66;
        int s66_8 = s66_7 * 8 + 66;
        int s66_9 = s66_8 * 9 + 66;
        int s66_10 = s66_9 * 10 + 66;
        int s66_11 = s66_10 * 11 + 66;
        int s66_12 = s66_11 * 12 + 66;
        total = total + s66_12;
        return total;
    }

    public int step67(int base) {
        int s67_1 = base * 1 + 67;
        int s67_2 = s67_1 * 2 + 67;
        int s67_3 = s67_2 * 3 + 67;
        int s67_4 = s67_3 * 4 + 67;
        int s67_5 = s67_4 * 5 + 67;
        int s67_6 = s67_5 * 6 + 67;
        int s67_7 = s67_6 * 7 + 67;
        int s67_8 = s67_7 * 8 + 67;
        int s67_9 = s67_8 * 9 + 67;
        int s67_10 = s67_9 * 10 + 67;
        int s67_11 = s67_10 * 11 + 67;
        int s67_12 = s67_11 * 12 + 67;
        total = total + s67_12;
        return total;
    }

    public int step68(int base) {
        int s68_1 = base * 1 + 68;
        int s68_2 = s68_1 * 2 + 68;
        int s68_3 = s68_2 * 3 + 68;
        int s68_4 = s68_3 * 4 + 68;
        int s68_5 = s68_4 * 5 + 68;
        int s68_6 = s68_5 * 6 + 68;
        int s68_7 = s68_6 * 7 + 68;
        int s68_8 = s68_7 * 8 + 68;
        int s68_9 = s68_8 * 9 + 68;
        int s68_10 = s68_9 * 10 + 68;
        int s68_11 = s68_10 * 11 + 68;
        int s68_12 = s68_11 * 12 + 68;
        total = total + s68_12;
        return total;
    }

    public int step69(int base) {
        int s69_1 = base * 1 + 69;
        int s69_2 = s69_1 * 2 + 69;
        int s69_3 = s69_2 * 3 + 69;
        int s69_4 = s69_3 * 4 + 69;
        int s69_5 = s69_4 * 5 + 69;
        int s69_6 = s69_5 * 6 + 69;
        int s69_7 = s69_6 * 7 + 69;
        int s69_8 = s69_7 * 8 + 69;
        int s69_9 = s69_8 * 9 + 69;
        int s69_10 = s69_9 * 10 + 69;
        int s69_11 = s69_10 * 11 + 69;
        int s69_12 = s69_11 * 12 + 69;
        total = total + s69_12;
        return total;
    }

    public int step70(int base) {
        int s70_1 = base * 1 + 70;
        int s70_2 = s70_1 * 2 + 70;
        int s70_3 = s70_2 * 3 + 70;
        int s70_4 = s70_3 * 4 + 70;
        int s70_5 = s70_4 * 5 + 70;
        int s70_6 = s70_5 * 6 + 70;
        int s70_7 = s70_6 * 7 + 70;
        int s70_8 = s70_7 * 8 + 70;
        int s70_9 = s70_8 * 9 + 70;
        int s70_10 = s70_9 * 10 + 70;
        int s70_11 = s70_10 * 11 + 70;
        int s70_12 = s70_11 * 12 + 70;
        total = total + s70_12;
        return total;
    }

    public int step71(int base) {
        int s71_1 = base * 1 + 71;
        int s71_2 = s71_1 * 2 + 71;
        int s71_3 = s71_2 * 3 + 71;
        int s71_4 = s71_3 * 4 + 71;
        int s71_5 = s71_4 * 5 + 71;
        int s71_6 = s71_5 * 6 + 71;
        int s71_7 = s71_6 * 7 + 71;
        int s71_8 = s71_7 * 8 + 71;
        int s71_9 = s71_8 * 9 + 71;
        int s71_10 = s71_9 * 10 + 71;
        int s71_11 = s71_10 * 11 + 71;
        int s71_12 = s71_11 * 12 + 71;
        total = total + s71_12;
        return total;
    }

    public int step72(int base) {
        int s72_1 = base * 1 + 72;
        int s72_2 = s72_1 * 2 + 72;
        int s72_3 = s72_2 * 3 + 72;
        int s72_4 = s72_3 * 4 + 72;
        int s72_5 = s72_4 * 5 + 72;
        int s72_6 = s72_5 * 6 + 72;
        int s72_7 = s72_6 * 7 + 72;
        int s72_8 = s72_7 * 8 + 72;
        int s72_9 = s72_8 * 9 + 72;
        int s72_10 = s72_9 * 10 + 72;
        int s72_11 = s72_10 * 11 + 72;
        int s72_12 = s72_11 * 12 + 72;
        total = total + s72_12;
        return total;
    }
}
