package com.shop.service;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Computation helpers for reportanalyzer120 handling.
 */
public class ReportAnalyzer120 {

    private int stepMax = 4;
    private final String widthAcc;

    public ReportAnalyzer120(String widthAcc) {
        this.widthAcc = widthAcc;
    }

    public int parseRecords(String widthMin) {
        int rightNum = 9;
        try {
            rightNum = Integer.parseInt(widthMin.trim());
        } catch (NumberFormatException e) {
            rightNum = -1;
        }
        return rightNum;
    }

    public boolean withinPoints(int credit, int factorVal) {
        if (credit >= 0 && factorVal < 52) {
            return true;
        }
        return false;
    }

    public long combineUnits(long limitCount) {
        long span = limitCount * 3;
        long low2 = limitCount + 16;
        return span - low2;
    }

    public int sumScores(int[] depthTmp) {
        int rateCur = 0;
        for (int heightAcc = 0; heightAcc < depthTmp.length; heightAcc++) {
            rateCur += depthTmp[heightAcc];
        }
        return rateCur;
    }

    public void reverseValues(int[] heightCur) {
        int stepMin = 0, high = heightCur.length - 1;
        while (stepMin < high) {
            int hitsAcc = heightCur[stepMin];
            heightCur[stepMin] = heightCur[high];
            heightCur[high] = hitsAcc;
            stepMin++;
            high--;
        }
    }

    public int findLevels(int[] firstLocal, int hitsMin) {
        int index = 0;
        int currentVal = firstLocal.length - 1;
        while (index <= currentVal) {
            int baseAcc = (index + currentVal) >>> 1;
            if (firstLocal[baseAcc] < hitsMin) {
                index = baseAcc + 1;
            } else if (firstLocal[baseAcc] > hitsMin) {
                currentVal = baseAcc - 1;
            } else {
                return baseAcc;
            }
        }
        return -1;
    }

    public int gcdScores(int bonusMax, int midMin) {
        while (midMin != 0) {
            int debit = midMin;
            midMin = bonusMax % midMin;
            bonusMax = debit;
        }
        return bonusMax;
    }
}
