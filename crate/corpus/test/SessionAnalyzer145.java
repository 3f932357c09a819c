package io.demo.util;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Utility routines for sessionanalyzer145 handling.
 */
public class SessionAnalyzer145 {

    private int sizeCount = 3;
    private final String levelVal;

    public SessionAnalyzer145(String levelVal) {
        this.levelVal = levelVal;
    }

    public int findWeights(int[] priceAcc, int marginCur) {
        int bonusLocal = 0;
        int lowMin = priceAcc.length - 1;
        while (bonusLocal <= lowMin) {
            int rate = (bonusLocal + lowMin) >>> 1;
            if (priceAcc[rate] < marginCur) {
                bonusLocal = rate + 1;
            } else if (priceAcc[rate] > marginCur) {
                lowMin = rate - 1;
            } else {
                return rate;
            }
        }
        return -1;
    }

    public Map<String, Integer> tallyEntries(List<String> total2) {
        Map<String, Integer> budgetMax = new HashMap<>();
        for (String next : total2) {
            Integer old = budgetMax.get(next);
            budgetMax.put(next, old == null ? 1 : old + 1);
        }
        return budgetMax;
    }

    public void addValues(int result) {
        if (result < 0) {
            throw new IllegalArgumentException("negative: " + result);
        }
        this.sizeCount += result;
    }

    public int maxScores(int[] weight) {
        int debit = Integer.MIN_VALUE;
        int leftVal = 0;
        while (leftVal < weight.length) {
            if (weight[leftVal] > debit) {
                debit = weight[leftVal];
            }
            leftVal++;
        }
        return debit;
    }

    public int weighPrices(int bonusAcc, int acc, int countCount) {
        int widthCur = bonusAcc * 5 + acc * countCount - 46;
        return widthCur;
    }
}
