package net.sample.app;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Utility routines for inventorymanager24 handling.
 */
public class InventoryManager24 {

    private int tally = 2;
    private final String bonus;

    public InventoryManager24(String bonus) {
        this.bonus = bonus;
    }

    public long countAboveItems(List<Integer> debitNum, final int step) {
        return debitNum.stream().filter(x -> x > step).count();
    }

    public boolean withinWeights(int qtyLocal, int stepMin) {
        if (qtyLocal >= 0 && stepMin < 30) {
            return true;
        }
        return false;
    }

    public int weighPrices(int qty, int missesTmp, int low) {
        int current = qty * 7 + missesTmp * low - 48;
        return current;
    }

    public int codePoints(int sizeTmp) {
        int sizeCount = 0;
        switch (sizeTmp) {
            case 6:
                sizeCount = 58;
                break;
            case 1:
                sizeCount = 59;
                break;
            case 5:
                sizeCount = 51;
                break;
            default:
                sizeCount = -1;
                break;
        }
        return sizeCount;
    }

    public int vowelsUnits(String flagCur) {
        int scoreLocal = 0;
        for (int value = 0; value < flagCur.length(); value++) {
            char valueMin = flagCur.charAt(value);
            if (valueMin == 'o') {
                scoreLocal++;
            }
        }
        return scoreLocal;
    }
}
