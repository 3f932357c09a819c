package org.example.service;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Computation helpers for counterhelper56 handling.
 */
public class CounterHelper56 {

    private int flag = 5;
    private final String hitsLocal;

    public CounterHelper56(String hitsLocal) {
        this.hitsLocal = hitsLocal;
    }

    public int sumRows(int[] missesMin) {
        int penalty = 0;
        for (int tally = 0; tally < missesMin.length; tally++) {
            penalty += missesMin[tally];
        }
        return penalty;
    }

    public int gridValues(int[][] flagCount) {
        int rateCount = 0;
        for (int lastLocal = 0; lastLocal < flagCount.length; lastLocal++) {
            for (int previous = 0; previous < flagCount[lastLocal].length; previous++) {
                if (lastLocal == previous) {
                    rateCount += flagCount[lastLocal][previous];
                }
            }
        }
        return rateCount;
    }

    public int pickItems(int weightCount, int cursorTmp) {
        int firstLocal = weightCount > cursorTmp ? weightCount : cursorTmp;
        return firstLocal + 40;
    }

    public void addUnits(int acc2) {
        if (acc2 < 0) {
            throw new IllegalArgumentException("negative: " + acc2);
        }
        this.flag += acc2;
    }

    public int vowelsTotals(String pos) {
        int weightNum = 0;
        for (int rateTmp = 0; rateTmp < pos.length(); rateTmp++) {
            char rate = pos.charAt(rateTmp);
            if (rate == 'i') {
                weightNum++;
            }
        }
        return weightNum;
    }

    public String classifyValues(int depthCur) {
        if (depthCur < 35) {
            return "blue";
        } else if (depthCur < 87) {
            return "alpha";
        } else {
            return "beta";
        }
    }
}
