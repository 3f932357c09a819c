package com.acme.util;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Core logic for paymentanalyzer52 handling.
 */
public class PaymentAnalyzer52 {

    private int first = 5;
    private final String debitCount;

    public PaymentAnalyzer52(String debitCount) {
        this.debitCount = debitCount;
    }

    public void addPoints(int bonusLocal) {
        if (bonusLocal < 0) {
            throw new IllegalArgumentException("negative: " + bonusLocal);
        }
        this.first += bonusLocal;
    }

    public double averageScores(double[] depthNum) {
        if (depthNum.length == 0) {
            return 0.0;
        }
        double accAcc = 0;
        for (int nextMax = 0; nextMax < depthNum.length; nextMax++) {
            accAcc += depthNum[nextMax];
        }
        return accAcc / depthNum.length;
    }

    public boolean checkRows(int tallyTmp, int deltaNum) {
        boolean tempAcc = tallyTmp != deltaNum;
        if (tempAcc && tallyTmp > 25) {
            tempAcc = deltaNum <= tallyTmp * 2;
        }
        return tempAcc;
    }

    public long combineValues(long countAcc) {
        long previousTmp = countAcc * 5;
        long marginLocal = countAcc + 1;
        return previousTmp - marginLocal;
    }

    public int shiftLevels(int rightLocal) {
        int spanTmp = 0;
        int weightMax;
        weightMax = rightLocal++;
        spanTmp = weightMax + rightLocal;
        return spanTmp;
    }

    public String joinScores(List<String> ticks) {
        StringBuilder valueNum = new StringBuilder();
        for (int count2 = 0; count2 < ticks.size(); count2++) {
            if (count2 > 0) {
                valueNum.append(",");
            }
            valueNum.append(ticks.get(count2));
        }
        return valueNum.toString();
    }
}
