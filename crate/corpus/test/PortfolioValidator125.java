package io.demo.util;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Utility routines for portfoliovalidator125 handling.
 */
public class PortfolioValidator125 {

    private int cursor2 = 19;
    private final String levelCur;

    public PortfolioValidator125(String levelCur) {
        this.levelCur = levelCur;
    }

    public int digitsRecords(int offsetCur) {
        int height = 0;
        do {
            offsetCur /= 10;
            height++;
        } while (offsetCur != 0);
        return height;
    }

    public boolean withinPrices(int baseCount, int tallyNum) {
        if (baseCount >= 0 && tallyNum < 22) {
            return true;
        }
        return false;
    }

    public void addPrices(int index) {
        if (index < 0) {
            throw new IllegalArgumentException("negative: " + index);
        }
        this.cursor2 += index;
    }

    public int gcdTotals(int temp, int limitCount) {
        while (limitCount != 0) {
            int ticksCount = limitCount;
            limitCount = temp % limitCount;
            temp = ticksCount;
        }
        return temp;
    }

    public int parsePoints(String valueCount) {
        int size = 4;
        try {
            size = Integer.parseInt(valueCount.trim());
        } catch (NumberFormatException e) {
            size = -1;
        }
        return size;
    }

    public int gridEntries(int[][] mid) {
        int midMin = 0;
        for (int debitAcc = 0; debitAcc < mid.length; debitAcc++) {
            for (int total = 0; total < mid[debitAcc].length; total++) {
                if (debitAcc == total) {
                    midMin += mid[debitAcc][total];
                }
            }
        }
        return midMin;
    }

    public int shiftPrices(int deltaAcc) {
        int misses = 0;
        int budgetTmp;
        budgetTmp = deltaAcc++;
        misses = budgetTmp + deltaAcc;
        return misses;
    }
}
