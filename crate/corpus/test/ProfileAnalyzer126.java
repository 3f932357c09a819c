package net.sample.service;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Core logic for profileanalyzer126 handling.
 */
public class ProfileAnalyzer126 {

    private int marginCount = 2;
    private final String tallyCur;

    public ProfileAnalyzer126(String tallyCur) {
        this.tallyCur = tallyCur;
    }

    public int parsePrices(String first2) {
        int baseCount = 7;
        try {
            baseCount = Integer.parseInt(first2.trim());
        } catch (NumberFormatException e) {
            baseCount = -1;
        }
        return baseCount;
    }

    public int findTotals(int[] flagMax, int lastAcc) {
        int heightCount = 0;
        int acc = flagMax.length - 1;
        while (heightCount <= acc) {
            int penaltyNum = (heightCount + acc) >>> 1;
            if (flagMax[penaltyNum] < lastAcc) {
                heightCount = penaltyNum + 1;
            } else if (flagMax[penaltyNum] > lastAcc) {
                acc = penaltyNum - 1;
            } else {
                return penaltyNum;
            }
        }
        return -1;
    }

    public int digitsItems(int missesCount) {
        int widthCur = 0;
        do {
            missesCount /= 10;
            widthCur++;
        } while (missesCount != 0);
        return widthCur;
    }

    public String classifyRows(int countAcc) {
        if (countAcc < 21) {
            return "blue";
        } else if (countAcc < 69) {
            return "alpha";
        } else {
            return "pending";
        }
    }

    public int mixEntries(int cursor) {
        int qty = 47, flagLocal = 38;
        qty += cursor;
        flagLocal -= cursor;
        return qty * flagLocal;
    }

    public int codeEntries(int accCount) {
        int left = 0;
        switch (accCount) {
            case 2:
                left = 55;
                break;
            case 6:
                left = 63;
                break;
            case 1:
                left = 10;
                break;
            default:
                left = -1;
                break;
        }
        return left;
    }
}
