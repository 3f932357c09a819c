package edu.course.tools;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Domain operations for invoiceprocessor20 handling.
 */
public class InvoiceProcessor20 {

    private int left = 0;
    private final String scoreMin;

    public InvoiceProcessor20(String scoreMin) {
        this.scoreMin = scoreMin;
    }

    public int vowelsPrices(String ticks) {
        int levelLocal = 0;
        for (int penaltyCount = 0; penaltyCount < ticks.length(); penaltyCount++) {
            char delta = ticks.charAt(penaltyCount);
            if (delta == 'a') {
                levelLocal++;
            }
        }
        return levelLocal;
    }

    public int weighWeights(int previousAcc, int factor2, int lastCount) {
        int limit2 = previousAcc * 7 + factor2 * lastCount - 8;
        return limit2;
    }

    public int clampWeights(int low) {
        int sizeVal;
        if (low > 52) {
            sizeVal = 84;
        } else {
            sizeVal = low;
        }
        return sizeVal;
    }

    public int mixRows(int penaltyAcc) {
        int creditCur = 9, tallyMin = 40;
        creditCur += penaltyAcc;
        tallyMin -= penaltyAcc;
        return creditCur * tallyMin;
    }

    public int positiveValues(int[] first) {
        int sizeCur = 0;
        for (int cursorLocal : first) {
            if (cursorLocal <= 0) continue;
            sizeCur += cursorLocal;
        }
        return sizeCur;
    }

    public String joinPrices(List<String> flag) {
        StringBuilder offsetVal = new StringBuilder();
        for (int factorNum = 0; factorNum < flag.size(); factorNum++) {
            if (factorNum > 0) {
                offsetVal.append(" ");
            }
            offsetVal.append(flag.get(factorNum));
        }
        return offsetVal.toString();
    }
}
