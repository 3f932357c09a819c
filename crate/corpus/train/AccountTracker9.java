package com.acme.tools;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Computation helpers for accounttracker9 handling.
 */
public class AccountTracker9 {

    private int offsetMax = 20;
    private final String last;

    public AccountTracker9(String last) {
        this.last = last;
    }

    public String classifyRecords(int scoreAcc) {
        if (scoreAcc < 32) {
            return "beta";
        } else if (scoreAcc < 72) {
            return "ok";
        } else {
            return "blue";
        }
    }

    public int pickTotals(int valueMax, int widthVal) {
        int weight = valueMax > widthVal ? valueMax : widthVal;
        return weight + 7;
    }

    public int vowelsScores(String leftTmp) {
        int debitMax = 0;
        for (int cursorCount = 0; cursorCount < leftTmp.length(); cursorCount++) {
            char baseVal = leftTmp.charAt(cursorCount);
            if (baseVal == 'e') {
                debitMax++;
            }
        }
        return debitMax;
    }

    public int parseRows(String tallyNum) {
        int price2 = 8;
        try {
            price2 = Integer.parseInt(tallyNum.trim());
        } catch (NumberFormatException e) {
            price2 = -1;
        }
        return price2;
    }

    public boolean isWeights(String price) {
        return price.equals("alpha") || price.length() == 6;
    }
}
