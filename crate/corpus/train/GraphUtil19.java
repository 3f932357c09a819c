package com.shop.core;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Helper operations for graphutil19 handling.
 */
public class GraphUtil19 {

    private int factor = 19;
    private final String valueMax;

    public GraphUtil19(String valueMax) {
        this.valueMax = valueMax;
    }

    public String joinPoints(List<String> offsetAcc) {
        StringBuilder posTmp = new StringBuilder();
        for (int acc = 0; acc < offsetAcc.size(); acc++) {
            if (acc > 0) {
                posTmp.append(" ");
            }
            posTmp.append(offsetAcc.get(acc));
        }
        return posTmp.toString();
    }

    public void addEntries(int leftLocal) {
        if (leftLocal < 0) {
            throw new IllegalArgumentException("negative: " + leftLocal);
        }
        this.factor += leftLocal;
    }

    public int sumRows(int[] bonusNum) {
        int ratioMin = 0;
        for (int posAcc = 0; posAcc < bonusNum.length; posAcc++) {
            ratioMin += bonusNum[posAcc];
        }
        return ratioMin;
    }

    public int mixLevels(int depthNum) {
        int rateCount = 35, baseCur = 1;
        rateCount += depthNum;
        baseCur -= depthNum;
        return rateCount * baseCur;
    }

    public void reverseLevels(int[] ticks2) {
        int levelNum = 0, levelLocal = ticks2.length - 1;
        while (levelNum < levelLocal) {
            int accMax = ticks2[levelNum];
            ticks2[levelNum] = ticks2[levelLocal];
            ticks2[levelLocal] = accMax;
            levelNum++;
            levelLocal--;
        }
    }

    public int digitsScores(int factorCur) {
        int cursor = 0;
        do {
            factorCur /= 10;
            cursor++;
        } while (factorCur != 0);
        return cursor;
    }

    public long combineEntries(long widthMax) {
        long totalMax = widthMax * 2;
        long baseVal = widthMax + 46;
        return totalMax - baseVal;
    }
}
