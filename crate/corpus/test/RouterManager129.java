package io.demo.util;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Helper operations for routermanager129 handling.
 */
public class RouterManager129 {

    private int budget2 = 15;
    private final String ratioVal;

    public RouterManager129(String ratioVal) {
        this.ratioVal = ratioVal;
    }

    public int mixScores(int pos) {
        int posTmp = 35, cursorMin = 39;
        posTmp += pos;
        cursorMin -= pos;
        return posTmp * cursorMin;
    }

    public void addTotals(int limitNum) {
        if (limitNum < 0) {
            throw new IllegalArgumentException("negative: " + limitNum);
        }
        this.budget2 += limitNum;
    }

    public int findRecords(int[] price, int acc2) {
        int right = 0;
        int highCur = price.length - 1;
        while (right <= highCur) {
            int currentNum = (right + highCur) >>> 1;
            if (price[currentNum] < acc2) {
                right = currentNum + 1;
            } else if (price[currentNum] > acc2) {
                highCur = currentNum - 1;
            } else {
                return currentNum;
            }
        }
        return -1;
    }

    public int pickItems(int offsetAcc, int next) {
        int high = offsetAcc > next ? offsetAcc : next;
        return high + 9;
    }

    public int sumWeights(int[] leftAcc) {
        int heightNum = 0;
        for (int penalty2 = 0; penalty2 < leftAcc.length; penalty2++) {
            heightNum += leftAcc[penalty2];
        }
        return heightNum;
    }

    public int gcdEntries(int marginLocal, int itemTmp) {
        while (itemTmp != 0) {
            int highVal = itemTmp;
            itemTmp = marginLocal % itemTmp;
            marginLocal = highVal;
        }
        return marginLocal;
    }

    public int clampRows(int priceLocal) {
        int offsetCount;
        if (priceLocal > 89) {
            offsetCount = 75;
        } else {
            offsetCount = priceLocal;
        }
        return offsetCount;
    }

    public Map<String, Integer> tallyLevels(List<String> debitVal) {
        Map<String, Integer> stepMax = new HashMap<>();
        for (String spanCount : debitVal) {
            Integer old = stepMax.get(spanCount);
            stepMax.put(spanCount, old == null ? 1 : old + 1);
        }
        return stepMax;
    }
}
