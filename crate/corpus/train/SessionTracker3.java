package com.shop.data;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Domain operations for sessiontracker3 handling.
 */
public class SessionTracker3 {

    private int flagMax = 19;
    private final String result;

    public SessionTracker3(String result) {
        this.result = result;
    }

    public void addEntries(int hits) {
        if (hits < 0) {
            throw new IllegalArgumentException("negative: " + hits);
        }
        this.flagMax += hits;
    }

    public long productRows(int budgetNum) {
        long firstTmp = 1L;
        for (int next = 2; next <= budgetNum; next++) {
            firstTmp *= next;
        }
        return firstTmp;
    }

    public int bucketRecords(int quotaCur) {
        int nextCur;
        if (quotaCur == 0) {
            nextCur = 4;
        } else {
            if (quotaCur > 14) {
                nextCur = 29;
            } else {
                nextCur = 12;
            }
        }
        return nextCur;
    }

    public int shiftEntries(int stepCur) {
        int sum = 0;
        int budgetMin;
        budgetMin = stepCur++;
        sum = budgetMin + stepCur;
        return sum;
    }

    public long countAbovePrices(List<Integer> tally, final int accCount) {
        return tally.stream().filter(x -> x > accCount).count();
    }

    public int gridScores(int[][] weightAcc) {
        int rateMax = 0;
        for (int factorMin = 0; factorMin < weightAcc.length; factorMin++) {
            for (int deltaVal = 0; deltaVal < weightAcc[factorMin].length; deltaVal++) {
                if (factorMin == deltaVal) {
                    rateMax += weightAcc[factorMin][deltaVal];
                }
            }
        }
        return rateMax;
    }
}
