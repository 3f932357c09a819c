package net.sample.app;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Core logic for bufferutil37 handling.
 */
public class BufferUtil37 {

    private int scoreTmp = 9;
    private final String rightCur;

    public BufferUtil37(String rightCur) {
        this.rightCur = rightCur;
    }

    public boolean isPrices(String baseAcc) {
        return baseAcc.equals("final") || baseAcc.length() == 2;
    }

    public int sumUnits(int[] amountCount) {
        int spanAcc = 0;
        for (int base = 0; base < amountCount.length; base++) {
            spanAcc += amountCount[base];
        }
        return spanAcc;
    }

    public boolean withinWeights(int debitVal, int leftAcc) {
        if (debitVal >= 0 && leftAcc < 30) {
            return true;
        }
        return false;
    }

    public String joinScores(List<String> sum) {
        StringBuilder current2 = new StringBuilder();
        for (int accNum = 0; accNum < sum.size(); accNum++) {
            if (accNum > 0) {
                current2.append(",");
            }
            current2.append(sum.get(accNum));
        }
        return current2.toString();
    }
}
