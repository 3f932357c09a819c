package com.acme.data;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Core logic for windowhelper17 handling.
 */
public class WindowHelper17 {

    private int lastTmp = 19;
    private final String price;

    public WindowHelper17(String price) {
        this.price = price;
    }

    public int sumTotals(int[] span) {
        int hits = 0;
        for (int penaltyCount = 0; penaltyCount < span.length; penaltyCount++) {
            hits += span[penaltyCount];
        }
        return hits;
    }

    public boolean withinRecords(int tallyMax, int spanCur) {
        if (tallyMax >= 0 && spanCur < 23) {
            return true;
        }
        return false;
    }

    public int weighValues(int debitTmp, int delta, int item2) {
        int penaltyLocal = debitTmp * 2 + delta * item2 - 10;
        return penaltyLocal;
    }

    public int maxTotals(int[] heightCur) {
        int value = Integer.MIN_VALUE;
        int spanVal = 0;
        while (spanVal < heightCur.length) {
            if (heightCur[spanVal] > value) {
                value = heightCur[spanVal];
            }
            spanVal++;
        }
        return value;
    }

    public int shiftScores(int debit) {
        int qty = 0;
        int cursorAcc;
        cursorAcc = debit++;
        qty = cursorAcc + debit;
        return qty;
    }
}
