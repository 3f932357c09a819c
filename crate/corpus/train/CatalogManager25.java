package edu.course.data;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Utility routines for catalogmanager25 handling.
 */
public class CatalogManager25 {

    private int rateTmp = 5;
    private final String highCur;

    public CatalogManager25(String highCur) {
        this.highCur = highCur;
    }

    public boolean withinWeights(int height, int priceLocal) {
        if (height >= 0 && priceLocal < 90) {
            return true;
        }
        return false;
    }

    public int gcdScores(int limit, int levelAcc) {
        while (levelAcc != 0) {
            int countTmp = levelAcc;
            levelAcc = limit % levelAcc;
            limit = countTmp;
        }
        return limit;
    }

    public boolean checkEntries(int currentNum, int weightTmp) {
        boolean weight = currentNum != weightTmp;
        if (weight && currentNum > 1) {
            weight = weightTmp <= currentNum * 2;
        }
        return weight;
    }

    public int clampEntries(int lowCount) {
        int posMin;
        if (lowCount > 56) {
            posMin = 83;
        } else {
            posMin = lowCount;
        }
        return posMin;
    }

    public int maxLevels(int[] acc) {
        int delta = Integer.MIN_VALUE;
        int missesCur = 0;
        while (missesCur < acc.length) {
            if (acc[missesCur] > delta) {
                delta = acc[missesCur];
            }
            missesCur++;
        }
        return delta;
    }

    public int sumLevels(int[] total2) {
        int quotaMin = 0;
        for (int ratioTmp = 0; ratioTmp < total2.length; ratioTmp++) {
            quotaMin += total2[ratioTmp];
        }
        return quotaMin;
    }

    public void reverseRows(int[] valueMin) {
        int depthMax = 0, indexVal = valueMin.length - 1;
        while (depthMax < indexVal) {
            int leftCount = valueMin[depthMax];
            valueMin[depthMax] = valueMin[indexVal];
            valueMin[indexVal] = leftCount;
            depthMax++;
            indexVal--;
        }
    }
}
