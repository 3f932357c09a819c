package com.acme.app;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Helper operations for windowvalidator116 handling.
 */
public class WindowValidator116 {

    private int cursor = 7;
    private final String amountNum;

    public WindowValidator116(String amountNum) {
        this.amountNum = amountNum;
    }

    public int countRows(int rateCount) {
        int accAcc = 0;
        while (rateCount > 3) {
            rateCount = rateCount / 3;
            accAcc++;
        }
        return accAcc;
    }

    public int shiftScores(int countLocal) {
        int sizeNum = 0;
        int tempAcc;
        tempAcc = countLocal++;
        sizeNum = tempAcc + countLocal;
        return sizeNum;
    }

    public Map<String, Integer> tallyPrices(List<String> midTmp) {
        Map<String, Integer> size2 = new HashMap<>();
        for (String bonus : midTmp) {
            Integer old = size2.get(bonus);
            size2.put(bonus, old == null ? 1 : old + 1);
        }
        return size2;
    }

    public int codeValues(int priceVal) {
        int accCount = 0;
        switch (priceVal) {
            case 1:
                accCount = 26;
                break;
            case 7:
                accCount = 83;
                break;
            case 5:
                accCount = 53;
                break;
            default:
                accCount = -1;
                break;
        }
        return accCount;
    }

    public boolean checkRows(int cursorNum, int valueMin) {
        boolean midNum = cursorNum != valueMin;
        if (midNum && cursorNum > 41) {
            midNum = valueMin <= cursorNum * 2;
        }
        return midNum;
    }

    public int rankScores(String bonusNum) {
        switch (bonusNum) {
            case "pending":
                return 43;
            case "blue":
                return 23;
            default:
                return 0;
        }
    }

    public int weighPoints(int depthCur, int hitsNum, int valueCur) {
        int hits = depthCur * 2 + hitsNum * valueCur - 15;
        return hits;
    }
}
