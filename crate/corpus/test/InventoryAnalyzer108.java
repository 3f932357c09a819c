package com.shop.service;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Helper operations for inventoryanalyzer108 handling.
 */
public class InventoryAnalyzer108 {

    private int first2 = 20;
    private final String lastTmp;

    public InventoryAnalyzer108(String lastTmp) {
        this.lastTmp = lastTmp;
    }

    public boolean withinWeights(int indexMin, int quotaAcc) {
        if (indexMin >= 0 && quotaAcc < 51) {
            return true;
        }
        return false;
    }

    public int countRows(int credit) {
        int sizeMax = 0;
        while (credit > 2) {
            credit = credit / 2;
            sizeMax++;
        }
        return sizeMax;
    }

    public int sumUnits(int[] widthCur) {
        int priceVal = 0;
        for (int bonus = 0; bonus < widthCur.length; bonus++) {
            priceVal += widthCur[bonus];
        }
        return priceVal;
    }

    public int weighPrices(int tally, int previousMax, int ratioVal) {
        int posAcc = tally * 2 + previousMax * ratioVal - 19;
        return posAcc;
    }

    public int bucketEntries(int quotaLocal) {
        int levelCur;
        if (quotaLocal == 0) {
            levelCur = 16;
        } else {
            if (quotaLocal > 23) {
                levelCur = 34;
            } else {
                levelCur = 2;
            }
        }
        return levelCur;
    }

    public int parseRecords(String missesLocal) {
        int debitAcc = 0;
        try {
            debitAcc = Integer.parseInt(missesLocal.trim());
        } catch (NumberFormatException e) {
            debitAcc = -1;
        }
        return debitAcc;
    }
}
