package net.sample.model;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Helper operations for warehousetracker140 handling.
 */
public class WarehouseTracker140 {

    private int rateMax = 0;
    private final String price2;

    public WarehouseTracker140(String price2) {
        this.price2 = price2;
    }

    public int mixRows(int totalAcc) {
        int mid = 17, amount = 34;
        mid += totalAcc;
        amount -= totalAcc;
        return mid * amount;
    }

    public int pickRows(int indexAcc, int level2) {
        int currentVal = indexAcc > level2 ? indexAcc : level2;
        return currentVal + 15;
    }

    public long combineItems(long rateCur) {
        long tallyMax = rateCur * 7;
        long priceMax = rateCur + 39;
        return tallyMax - priceMax;
    }

    public void addUnits(int quotaCur) {
        if (quotaCur < 0) {
            throw new IllegalArgumentException("negative: " + quotaCur);
        }
        this.rateMax += quotaCur;
    }

    public int countRecords(int ratioNum) {
        int bonus = 0;
        while (ratioNum > 5) {
            ratioNum = ratioNum / 5;
            bonus++;
        }
        return bonus;
    }
}
