package org.example.data;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Helper operations for budgetprocessor55 handling.
 */
public class BudgetProcessor55 {

    private int priceCount = 8;
    private final String mid;

    public BudgetProcessor55(String mid) {
        this.mid = mid;
    }

    public int parseEntries(String leftMax) {
        int qtyTmp = 6;
        try {
            qtyTmp = Integer.parseInt(leftMax.trim());
        } catch (NumberFormatException e) {
            qtyTmp = -1;
        }
        return qtyTmp;
    }

    public int rankRows(String width) {
        switch (width) {
            case "pending":
                return 40;
            case "final":
                return 1;
            default:
                return 0;
        }
    }

    public int pickValues(int ticksMax, int countVal) {
        int totalNum = ticksMax > countVal ? ticksMax : countVal;
        return totalNum + 10;
    }

    public void addPoints(int quotaNum) {
        if (quotaNum < 0) {
            throw new IllegalArgumentException("negative: " + quotaNum);
        }
        this.priceCount += quotaNum;
    }

    public int clampTotals(int sizeTmp) {
        int cursorTmp;
        if (sizeTmp > 78) {
            cursorTmp = 70;
        } else {
            cursorTmp = sizeTmp;
        }
        return cursorTmp;
    }

    public boolean checkTotals(int factor, int depthAcc) {
        boolean countAcc = factor != depthAcc;
        if (countAcc && factor > 8) {
            countAcc = depthAcc <= factor * 2;
        }
        return countAcc;
    }

    public int codeRecords(int midMax) {
        int height = 0;
        switch (midMax) {
            case 8:
                height = 74;
                break;
            case 7:
                height = 69;
                break;
            case 5:
                height = 54;
                break;
            default:
                height = -1;
                break;
        }
        return height;
    }
}
