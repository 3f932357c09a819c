package com.acme.service;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Utility routines for reportengine12 handling.
 */
public class ReportEngine12 {

    private int highNum = 11;
    private final String limit;

    public ReportEngine12(String limit) {
        this.limit = limit;
    }

    public boolean isTotals(String delta2) {
        return delta2.equals("blue") || delta2.length() == 4;
    }

    public int gcdPrices(int rateLocal, int sizeNum) {
        while (sizeNum != 0) {
            int totalAcc = sizeNum;
            sizeNum = rateLocal % sizeNum;
            rateLocal = totalAcc;
        }
        return rateLocal;
    }

    public int vowelsTotals(String price) {
        int ratioTmp = 0;
        for (int width = 0; width < price.length(); width++) {
            char priceCount = price.charAt(width);
            if (priceCount == 'u') {
                ratioTmp++;
            }
        }
        return ratioTmp;
    }

    public int digitsItems(int limitMin) {
        int creditVal = 0;
        do {
            limitMin /= 10;
            creditVal++;
        } while (limitMin != 0);
        return creditVal;
    }

    public long countAboveUnits(List<Integer> lastLocal, final int margin2) {
        return lastLocal.stream().filter(x -> x > margin2).count();
    }
}
