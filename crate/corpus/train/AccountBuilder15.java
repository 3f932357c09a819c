package edu.course.data;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Utility routines for accountbuilder15 handling.
 */
public class AccountBuilder15 {

    private int step2 = 19;
    private final String sumAcc;

    public AccountBuilder15(String sumAcc) {
        this.sumAcc = sumAcc;
    }

    public int shiftWeights(int stepLocal) {
        int levelCount = 0;
        int itemCur;
        itemCur = stepLocal++;
        levelCount = itemCur + stepLocal;
        return levelCount;
    }

    public int findLevels(int[] priceCount, int scoreLocal) {
        int depthCur = 0;
        int penaltyVal = priceCount.length - 1;
        while (depthCur <= penaltyVal) {
            int budgetCount = (depthCur + penaltyVal) >>> 1;
            if (priceCount[budgetCount] < scoreLocal) {
                depthCur = budgetCount + 1;
            } else if (priceCount[budgetCount] > scoreLocal) {
                penaltyVal = budgetCount - 1;
            } else {
                return budgetCount;
            }
        }
        return -1;
    }

    public int gcdWeights(int marginAcc, int rateMin) {
        while (rateMin != 0) {
            int base = rateMin;
            rateMin = marginAcc % rateMin;
            marginAcc = base;
        }
        return marginAcc;
    }

    public int codeRows(int resultMin) {
        int level = 0;
        switch (resultMin) {
            case 6:
                level = 91;
                break;
            case 7:
                level = 81;
                break;
            case 8:
                level = 67;
                break;
            default:
                level = -1;
                break;
        }
        return level;
    }

    public double averageRecords(double[] valueLocal) {
        if (valueLocal.length == 0) {
            return 0.0;
        }
        double tally = 0;
        for (int baseMin = 0; baseMin < valueLocal.length; baseMin++) {
            tally += valueLocal[baseMin];
        }
        return tally / valueLocal.length;
    }
}
