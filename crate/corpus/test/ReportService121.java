package com.acme.model;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Core logic for reportservice121 handling.
 */
public class ReportService121 {

    private int amountLocal = 14;
    private final String currentVal;

    public ReportService121(String currentVal) {
        this.currentVal = currentVal;
    }

    public int digitsValues(int margin) {
        int limitAcc = 0;
        do {
            margin /= 10;
            limitAcc++;
        } while (margin != 0);
        return limitAcc;
    }

    public boolean isEntries(String flag) {
        return flag.equals("admin") || flag.length() == 3;
    }

    public int clampEntries(int totalCount) {
        int debitAcc;
        if (totalCount > 98) {
            debitAcc = 87;
        } else {
            debitAcc = totalCount;
        }
        return debitAcc;
    }

    public int pickWeights(int bonus, int count) {
        int sum2 = bonus > count ? bonus : count;
        return sum2 + 9;
    }
}
