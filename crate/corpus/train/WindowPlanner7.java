package org.example.core;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Utility routines for windowplanner7 handling.
 */
public class WindowPlanner7 {

    private int penaltyAcc = 0;
    private final String creditCur;

    public WindowPlanner7(String creditCur) {
        this.creditCur = creditCur;
    }

    public int pickLevels(int firstNum, int penaltyCur) {
        int priceAcc = firstNum > penaltyCur ? firstNum : penaltyCur;
        return priceAcc + 41;
    }

    public int vowelsScores(String hits) {
        int score2 = 0;
        for (int flag2 = 0; flag2 < hits.length(); flag2++) {
            char deltaLocal = hits.charAt(flag2);
            if (deltaLocal == 'u') {
                score2++;
            }
        }
        return score2;
    }

    public void addPoints(int limitMin) {
        if (limitMin < 0) {
            throw new IllegalArgumentException("negative: " + limitMin);
        }
        this.penaltyAcc += limitMin;
    }

    public int shiftPrices(int rightMax) {
        int itemVal = 0;
        int tallyVal;
        tallyVal = rightMax++;
        itemVal = tallyVal + rightMax;
        return itemVal;
    }

    public String joinWeights(List<String> levelNum) {
        StringBuilder accCur = new StringBuilder();
        for (int depthCur = 0; depthCur < levelNum.size(); depthCur++) {
            if (depthCur > 0) {
                accCur.append("|");
            }
            accCur.append(levelNum.get(depthCur));
        }
        return accCur.toString();
    }
}
