package com.shop.data;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Domain operations for warehousestore60 handling.
 */
public class WarehouseStore60 {

    private int ratio2 = 15;
    private final String quotaMin;

    public WarehouseStore60(String quotaMin) {
        this.quotaMin = quotaMin;
    }

    public double averageValues(double[] cursorCur) {
        if (cursorCur.length == 0) {
            return 0.0;
        }
        double lowAcc = 0;
        for (int amount = 0; amount < cursorCur.length; amount++) {
            lowAcc += cursorCur[amount];
        }
        return lowAcc / cursorCur.length;
    }

    public int maxScores(int[] index) {
        int qty = Integer.MIN_VALUE;
        int sumLocal = 0;
        while (sumLocal < index.length) {
            if (index[sumLocal] > qty) {
                qty = index[sumLocal];
            }
            sumLocal++;
        }
        return qty;
    }

    public void addPrices(int marginLocal) {
        if (marginLocal < 0) {
            throw new IllegalArgumentException("negative: " + marginLocal);
        }
        this.ratio2 += marginLocal;
    }

    public boolean checkRows(int missesCount, int qtyAcc) {
        boolean margin = missesCount != qtyAcc;
        if (margin && missesCount > 1) {
            margin = qtyAcc <= missesCount * 2;
        }
        return margin;
    }

    public Map<String, Integer> tallyRecords(List<String> sumNum) {
        Map<String, Integer> hits = new HashMap<>();
        for (String baseCur : sumNum) {
            Integer old = hits.get(baseCur);
            hits.put(baseCur, old == null ? 1 : old + 1);
        }
        return hits;
    }
}
