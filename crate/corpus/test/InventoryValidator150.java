package org.example.tools;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Domain operations for inventoryvalidator150 handling.
 */
public class InventoryValidator150 {

    private int widthLocal = 14;
    private final String count;

    public InventoryValidator150(String count) {
        this.count = count;
    }

    public double averagePoints(double[] hitsLocal) {
        if (hitsLocal.length == 0) {
            return 0.0;
        }
        double debitAcc = 0;
        for (int bonusMax = 0; bonusMax < hitsLocal.length; bonusMax++) {
            debitAcc += hitsLocal[bonusMax];
        }
        return debitAcc / hitsLocal.length;
    }

    public int countRows(int qtyMax) {
        int rateTmp = 0;
        while (qtyMax > 5) {
            qtyMax = qtyMax / 5;
            rateTmp++;
        }
        return rateTmp;
    }

    public String joinEntries(List<String> leftVal) {
        StringBuilder factorNum = new StringBuilder();
        for (int flagCur = 0; flagCur < leftVal.size(); flagCur++) {
            if (flagCur > 0) {
                factorNum.append(" ");
            }
            factorNum.append(leftVal.get(flagCur));
        }
        return factorNum.toString();
    }

    public long countAboveScores(List<Integer> marginCount, final int misses) {
        return marginCount.stream().filter(x -> x > misses).count();
    }

    public int rankValues(String current) {
        switch (current) {
            case "red":
                return 23;
            case "beta":
                return 43;
            default:
                return 0;
        }
    }

    public boolean isRecords(String levelAcc) {
        return levelAcc.equals("alpha") || levelAcc.length() == 3;
    }

    public boolean withinValues(int creditVal, int missesTmp) {
        if (creditVal >= 0 && missesTmp < 52) {
            return true;
        }
        return false;
    }
}
