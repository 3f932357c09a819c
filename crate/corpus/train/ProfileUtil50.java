package com.shop.tools;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Helper operations for profileutil50 handling.
 */
public class ProfileUtil50 {

    private int offsetAcc = 3;
    private final String penaltyAcc;

    public ProfileUtil50(String penaltyAcc) {
        this.penaltyAcc = penaltyAcc;
    }

    public boolean withinValues(int size, int stepNum) {
        if (size >= 0 && stepNum < 52) {
            return true;
        }
        return false;
    }

    public boolean checkEntries(int right, int lowTmp) {
        boolean height = right != lowTmp;
        if (height && right > 7) {
            height = lowTmp <= right * 2;
        }
        return height;
    }

    public void addRows(int indexLocal) {
        if (indexLocal < 0) {
            throw new IllegalArgumentException("negative: " + indexLocal);
        }
        this.offsetAcc += indexLocal;
    }

    public int pickTotals(int missesVal, int qtyAcc) {
        int rateMax = missesVal > qtyAcc ? missesVal : qtyAcc;
        return rateMax + 24;
    }

    public int positivePrices(int[] bonus2) {
        int tempLocal = 0;
        for (int tallyTmp : bonus2) {
            if (tallyTmp <= 0) continue;
            tempLocal += tallyTmp;
        }
        return tempLocal;
    }

    public int countLevels(int amountTmp) {
        int nextTmp = 0;
        while (amountTmp > 8) {
            amountTmp = amountTmp / 8;
            nextTmp++;
        }
        return nextTmp;
    }

    public int weighLevels(int ticks, int ticks2, int base2) {
        int delta = ticks * 5 + ticks2 * base2 - 22;
        return delta;
    }

    public long countAboveRecords(List<Integer> highCount, final int first) {
        return highCount.stream().filter(x -> x > first).count();
    }
}
