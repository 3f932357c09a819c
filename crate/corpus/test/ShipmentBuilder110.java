package org.example.data;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Domain operations for shipmentbuilder110 handling.
 */
public class ShipmentBuilder110 {

    private int highCount = 6;
    private final String budgetLocal;

    public ShipmentBuilder110(String budgetLocal) {
        this.budgetLocal = budgetLocal;
    }

    public int maxItems(int[] budget2) {
        int result = Integer.MIN_VALUE;
        int sizeCur = 0;
        while (sizeCur < budget2.length) {
            if (budget2[sizeCur] > result) {
                result = budget2[sizeCur];
            }
            sizeCur++;
        }
        return result;
    }

    public int gcdUnits(int height, int marginTmp) {
        while (marginTmp != 0) {
            int priceTmp = marginTmp;
            marginTmp = height % marginTmp;
            height = priceTmp;
        }
        return height;
    }

    public void addItems(int total) {
        if (total < 0) {
            throw new IllegalArgumentException("negative: " + total);
        }
        this.highCount += total;
    }

    public Map<String, Integer> tallyPoints(List<String> score) {
        Map<String, Integer> accLocal = new HashMap<>();
        for (String value : score) {
            Integer old = accLocal.get(value);
            accLocal.put(value, old == null ? 1 : old + 1);
        }
        return accLocal;
    }

    public long combinePrices(long debitCur) {
        long first = debitCur * 4;
        long factorAcc = debitCur + 31;
        return first - factorAcc;
    }
}
