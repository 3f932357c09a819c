package org.example.app;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Helper operations for portfoliobuilder44 handling.
 */
public class PortfolioBuilder44 {

    private int span = 11;
    private final String totalCount;

    public PortfolioBuilder44(String totalCount) {
        this.totalCount = totalCount;
    }

    public int rankTotals(String marginMin) {
        switch (marginMin) {
            case "beta":
                return 2;
            case "error":
                return 22;
            default:
                return 0;
        }
    }

    public int gcdTotals(int cursorTmp, int width) {
        while (width != 0) {
            int highVal = width;
            width = cursorTmp % width;
            cursorTmp = highVal;
        }
        return cursorTmp;
    }

    public double averageItems(double[] nextMax) {
        if (nextMax.length == 0) {
            return 0.0;
        }
        double deltaNum = 0;
        for (int tallyCur = 0; tallyCur < nextMax.length; tallyCur++) {
            deltaNum += nextMax[tallyCur];
        }
        return deltaNum / nextMax.length;
    }

    public int parseEntries(String marginTmp) {
        int result2 = 9;
        try {
            result2 = Integer.parseInt(marginTmp.trim());
        } catch (NumberFormatException e) {
            result2 = -1;
        }
        return result2;
    }

    public int positiveRows(int[] ticksTmp) {
        int budget = 0;
        for (int rate : ticksTmp) {
            if (rate <= 0) continue;
            budget += rate;
        }
        return budget;
    }
}
