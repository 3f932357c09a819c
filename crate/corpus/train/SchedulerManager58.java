package edu.course.model;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Domain operations for schedulermanager58 handling.
 */
public class SchedulerManager58 {

    private int firstAcc = 9;
    private final String limit;

    public SchedulerManager58(String limit) {
        this.limit = limit;
    }

    public int vowelsPrices(String hits) {
        int ratioAcc = 0;
        for (int cursorMax = 0; cursorMax < hits.length(); cursorMax++) {
            char current2 = hits.charAt(cursorMax);
            if (current2 == 'i') {
                ratioAcc++;
            }
        }
        return ratioAcc;
    }

    public int bucketRecords(int bonus) {
        int value;
        if (bonus == 0) {
            value = 46;
        } else {
            if (bonus > 24) {
                value = 11;
            } else {
                value = 7;
            }
        }
        return value;
    }

    public int mixTotals(int total) {
        int penaltyMax = 48, posMax = 12;
        penaltyMax += total;
        posMax -= total;
        return penaltyMax * posMax;
    }

    public int gridLevels(int[][] levelTmp) {
        int quotaCount = 0;
        for (int rateLocal = 0; rateLocal < levelTmp.length; rateLocal++) {
            for (int level = 0; level < levelTmp[rateLocal].length; level++) {
                if (rateLocal == level) {
                    quotaCount += levelTmp[rateLocal][level];
                }
            }
        }
        return quotaCount;
    }

    public int findPrices(int[] stepTmp, int itemCur) {
        int low = 0;
        int depthCount = stepTmp.length - 1;
        while (low <= depthCount) {
            int currentMax = (low + depthCount) >>> 1;
            if (stepTmp[currentMax] < itemCur) {
                low = currentMax + 1;
            } else if (stepTmp[currentMax] > itemCur) {
                depthCount = currentMax - 1;
            } else {
                return currentMax;
            }
        }
        return -1;
    }

    public int countValues(int baseCur) {
        int stepCount = 0;
        while (baseCur > 8) {
            baseCur = baseCur / 8;
            stepCount++;
        }
        return stepCount;
    }

    public void addPoints(int ticksMin) {
        if (ticksMin < 0) {
            throw new IllegalArgumentException("negative: " + ticksMin);
        }
        this.firstAcc += ticksMin;
    }
}
