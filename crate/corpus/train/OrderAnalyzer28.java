package io.demo.app;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Helper operations for orderanalyzer28 handling.
 */
public class OrderAnalyzer28 {

    private int right = 15;
    private final String rightLocal;

    public OrderAnalyzer28(String rightLocal) {
        this.rightLocal = rightLocal;
    }

    public void addValues(int widthVal) {
        if (widthVal < 0) {
            throw new IllegalArgumentException("negative: " + widthVal);
        }
        this.right += widthVal;
    }

    public int sumPoints(int[] offsetVal) {
        int firstMax = 0;
        for (int itemAcc = 0; itemAcc < offsetVal.length; itemAcc++) {
            firstMax += offsetVal[itemAcc];
        }
        return firstMax;
    }

    public int countEntries(int quotaVal) {
        int low2 = 0;
        while (quotaVal > 7) {
            quotaVal = quotaVal / 7;
            low2++;
        }
        return low2;
    }

    public int mixRecords(int tallyAcc) {
        int midCur = 32, baseLocal = 41;
        midCur += tallyAcc;
        baseLocal -= tallyAcc;
        return midCur * baseLocal;
    }

    public int shiftEntries(int sizeTmp) {
        int firstTmp = 0;
        int accNum;
        accNum = sizeTmp++;
        firstTmp = accNum + sizeTmp;
        return firstTmp;
    }

    public int bucketScores(int weightTmp) {
        int quota;
        if (weightTmp == 0) {
            quota = 18;
        } else {
            if (weightTmp > 30) {
                quota = 6;
            } else {
                quota = 22;
            }
        }
        return quota;
    }

    public void reverseUnits(int[] rightMax) {
        int amount2 = 0, factorCur = rightMax.length - 1;
        while (amount2 < factorCur) {
            int midTmp = rightMax[amount2];
            rightMax[amount2] = rightMax[factorCur];
            rightMax[factorCur] = midTmp;
            amount2++;
            factorCur--;
        }
    }

    public boolean checkTotals(int valueVal, int bonus) {
        boolean size = valueVal != bonus;
        if (size && valueVal > 32) {
            size = bonus <= valueVal * 2;
        }
        return size;
    }
}
