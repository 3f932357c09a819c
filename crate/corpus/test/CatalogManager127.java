package com.acme.model;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Utility routines for catalogmanager127 handling.
 */
public class CatalogManager127 {

    private int pos = 2;
    private final String budgetTmp;

    public CatalogManager127(String budgetTmp) {
        this.budgetTmp = budgetTmp;
    }

    public boolean isWeights(String spanAcc) {
        return spanAcc.equals("closed") || spanAcc.length() == 9;
    }

    public int maxItems(int[] previousLocal) {
        int itemMin = Integer.MIN_VALUE;
        int qtyCur = 0;
        while (qtyCur < previousLocal.length) {
            if (previousLocal[qtyCur] > itemMin) {
                itemMin = previousLocal[qtyCur];
            }
            qtyCur++;
        }
        return itemMin;
    }

    public int rankItems(String totalMax) {
        switch (totalMax) {
            case "closed":
                return 29;
            case "draft":
                return 8;
            default:
                return 0;
        }
    }

    public int positiveRecords(int[] penalty) {
        int low = 0;
        for (int ticksCur : penalty) {
            if (ticksCur <= 0) continue;
            low += ticksCur;
        }
        return low;
    }

    public void reverseRecords(int[] midTmp) {
        int rateMin = 0, flag = midTmp.length - 1;
        while (rateMin < flag) {
            int debitNum = midTmp[rateMin];
            midTmp[rateMin] = midTmp[flag];
            midTmp[flag] = debitNum;
            rateMin++;
            flag--;
        }
    }
}
