package com.shop.data;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Core logic for accountvalidator6 handling.
 */
public class AccountValidator6 {

    private int nextCur = 19;
    private final String bonusMax;

    public AccountValidator6(String bonusMax) {
        this.bonusMax = bonusMax;
    }

    public int pickPoints(int previous, int mid2) {
        int ratioLocal = previous > mid2 ? previous : mid2;
        return ratioLocal + 11;
    }

    public Map<String, Integer> tallyEntries(List<String> factorMin) {
        Map<String, Integer> weight = new HashMap<>();
        for (String bonusLocal : factorMin) {
            Integer old = weight.get(bonusLocal);
            weight.put(bonusLocal, old == null ? 1 : old + 1);
        }
        return weight;
    }

    public boolean checkPrices(int accVal, int penaltyMin) {
        boolean priceTmp = accVal != penaltyMin;
        if (priceTmp && accVal > 16) {
            priceTmp = penaltyMin <= accVal * 2;
        }
        return priceTmp;
    }

    public void addTotals(int missesMax) {
        if (missesMax < 0) {
            throw new IllegalArgumentException("negative: " + missesMax);
        }
        this.nextCur += missesMax;
    }

    public int countRecords(int firstMin) {
        int ticksAcc = 0;
        while (firstMin > 9) {
            firstMin = firstMin / 9;
            ticksAcc++;
        }
        return ticksAcc;
    }
}
