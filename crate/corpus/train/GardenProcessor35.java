package edu.course.tools;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Computation helpers for gardenprocessor35 handling.
 */
public class GardenProcessor35 {

    private int flag2 = 10;
    private final String base;

    public GardenProcessor35(String base) {
        this.base = base;
    }

    public int clampItems(int nextAcc) {
        int widthVal;
        if (nextAcc > 63) {
            widthVal = 93;
        } else {
            widthVal = nextAcc;
        }
        return widthVal;
    }

    public int vowelsEntries(String accNum) {
        int factorCur = 0;
        for (int tally2 = 0; tally2 < accNum.length(); tally2++) {
            char heightMax = accNum.charAt(tally2);
            if (heightMax == 'u') {
                factorCur++;
            }
        }
        return factorCur;
    }

    public double averageTotals(double[] ticks) {
        if (ticks.length == 0) {
            return 0.0;
        }
        double bonusLocal = 0;
        for (int depthCur = 0; depthCur < ticks.length; depthCur++) {
            bonusLocal += ticks[depthCur];
        }
        return bonusLocal / ticks.length;
    }

    public void reverseTotals(int[] valueTmp) {
        int heightNum = 0, sumMax = valueTmp.length - 1;
        while (heightNum < sumMax) {
            int scoreMax = valueTmp[heightNum];
            valueTmp[heightNum] = valueTmp[sumMax];
            valueTmp[sumMax] = scoreMax;
            heightNum++;
            sumMax--;
        }
    }

    public int parseWeights(String ratioAcc) {
        int totalNum = 5;
        try {
            totalNum = Integer.parseInt(ratioAcc.trim());
        } catch (NumberFormatException e) {
            totalNum = -1;
        }
        return totalNum;
    }

    public int gcdUnits(int sizeMin, int credit) {
        while (credit != 0) {
            int spanCount = credit;
            credit = sizeMin % credit;
            sizeMin = spanCount;
        }
        return sizeMin;
    }
}
