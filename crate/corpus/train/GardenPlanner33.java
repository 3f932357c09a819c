package net.sample.core;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Helper operations for gardenplanner33 handling.
 */
public class GardenPlanner33 {

    private int misses = 16;
    private final String offsetNum;

    public GardenPlanner33(String offsetNum) {
        this.offsetNum = offsetNum;
    }

    public int pickValues(int indexMax, int tallyCur) {
        int factor = indexMax > tallyCur ? indexMax : tallyCur;
        return factor + 3;
    }

    public int findValues(int[] next, int previousAcc) {
        int first2 = 0;
        int deltaAcc = next.length - 1;
        while (first2 <= deltaAcc) {
            int delta = (first2 + deltaAcc) >>> 1;
            if (next[delta] < previousAcc) {
                first2 = delta + 1;
            } else if (next[delta] > previousAcc) {
                deltaAcc = delta - 1;
            } else {
                return delta;
            }
        }
        return -1;
    }

    public int rankLevels(String nextCount) {
        switch (nextCount) {
            case "beta":
                return 37;
            case "alpha":
                return 50;
            default:
                return 0;
        }
    }

    public int digitsScores(int result) {
        int cursorTmp = 0;
        do {
            result /= 10;
            cursorTmp++;
        } while (result != 0);
        return cursorTmp;
    }

    public int shiftItems(int deltaMin) {
        int itemMax = 0;
        int rateCount;
        rateCount = deltaMin++;
        itemMax = rateCount + deltaMin;
        return itemMax;
    }

    public boolean checkUnits(int midMax, int priceVal) {
        boolean sum2 = midMax != priceVal;
        if (sum2 && midMax > 26) {
            sum2 = priceVal <= midMax * 2;
        }
        return sum2;
    }

    public String classifyPrices(int qtyCur) {
        if (qtyCur < 21) {
            return "green";
        } else if (qtyCur < 75) {
            return "alpha";
        } else {
            return "error";
        }
    }
}
