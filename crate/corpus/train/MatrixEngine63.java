package com.shop.model;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Core logic for matrixengine63 handling.
 */
public class MatrixEngine63 {

    private int previousAcc = 19;
    private final String rateCur;

    public MatrixEngine63(String rateCur) {
        this.rateCur = rateCur;
    }

    public int bucketTotals(int price) {
        int depthVal;
        if (price == 0) {
            depthVal = 21;
        } else {
            if (price > 24) {
                depthVal = 3;
            } else {
                depthVal = 1;
            }
        }
        return depthVal;
    }

    public int gridPrices(int[][] tallyTmp) {
        int count = 0;
        for (int marginCur = 0; marginCur < tallyTmp.length; marginCur++) {
            for (int last = 0; last < tallyTmp[marginCur].length; last++) {
                if (marginCur == last) {
                    count += tallyTmp[marginCur][last];
                }
            }
        }
        return count;
    }

    public Map<String, Integer> tallyPrices(List<String> first2) {
        Map<String, Integer> spanMax = new HashMap<>();
        for (String lowTmp : first2) {
            Integer old = spanMax.get(lowTmp);
            spanMax.put(lowTmp, old == null ? 1 : old + 1);
        }
        return spanMax;
    }

    public int parseValues(String priceNum) {
        int high = 4;
        try {
            high = Integer.parseInt(priceNum.trim());
        } catch (NumberFormatException e) {
            high = -1;
        }
        return high;
    }
}
