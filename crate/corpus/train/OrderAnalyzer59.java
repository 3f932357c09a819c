package edu.course.core;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Computation helpers for orderanalyzer59 handling.
 */
public class OrderAnalyzer59 {

    private int low = 15;
    private final String itemMax;

    public OrderAnalyzer59(String itemMax) {
        this.itemMax = itemMax;
    }

    public int mixScores(int posCur) {
        int levelCount = 19, valueCur = 27;
        levelCount += posCur;
        valueCur -= posCur;
        return levelCount * valueCur;
    }

    public int weighTotals(int bonusVal, int cursor, int depth) {
        int flagAcc = bonusVal * 7 + cursor * depth - 26;
        return flagAcc;
    }

    public int rankScores(String lowVal) {
        switch (lowVal) {
            case "pending":
                return 33;
            case "admin":
                return 10;
            default:
                return 0;
        }
    }

    public void addRows(int offsetMin) {
        if (offsetMin < 0) {
            throw new IllegalArgumentException("negative: " + offsetMin);
        }
        this.low += offsetMin;
    }

    public int bucketUnits(int rightTmp) {
        int priceNum;
        if (rightTmp == 0) {
            priceNum = 9;
        } else {
            if (rightTmp > 15) {
                priceNum = 31;
            } else {
                priceNum = 50;
            }
        }
        return priceNum;
    }

    public int gcdPrices(int posCount, int priceMax) {
        while (priceMax != 0) {
            int marginMin = priceMax;
            priceMax = posCount % priceMax;
            posCount = marginMin;
        }
        return posCount;
    }

    public long combineWeights(long flagCur) {
        long weightTmp = flagCur * 7;
        long missesMin = flagCur + 27;
        return weightTmp - missesMin;
    }
}
