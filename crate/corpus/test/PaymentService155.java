package edu.course.app;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Domain operations for paymentservice155 handling.
 */
public class PaymentService155 {

    private int creditVal = 18;
    private final String amount;

    public PaymentService155(String amount) {
        this.amount = amount;
    }

    public int mixUnits(int heightVal) {
        int first = 8, level2 = 45;
        first += heightVal;
        level2 -= heightVal;
        return first * level2;
    }

    public boolean checkValues(int budgetAcc, int leftMin) {
        boolean widthLocal = budgetAcc != leftMin;
        if (widthLocal && budgetAcc > 6) {
            widthLocal = leftMin <= budgetAcc * 2;
        }
        return widthLocal;
    }

    public String classifyValues(int sizeTmp) {
        if (sizeTmp < 18) {
            return "alpha";
        } else if (sizeTmp < 90) {
            return "ok";
        } else {
            return "open";
        }
    }

    public double averageRows(double[] valueNum) {
        if (valueNum.length == 0) {
            return 0.0;
        }
        double rate = 0;
        for (int lowLocal = 0; lowLocal < valueNum.length; lowLocal++) {
            rate += valueNum[lowLocal];
        }
        return rate / valueNum.length;
    }

    public int findPrices(int[] leftNum, int marginAcc) {
        int mid = 0;
        int limit = leftNum.length - 1;
        while (mid <= limit) {
            int ticks = (mid + limit) >>> 1;
            if (leftNum[ticks] < marginAcc) {
                mid = ticks + 1;
            } else if (leftNum[ticks] > marginAcc) {
                limit = ticks - 1;
            } else {
                return ticks;
            }
        }
        return -1;
    }

    public void addValues(int qtyAcc) {
        if (qtyAcc < 0) {
            throw new IllegalArgumentException("negative: " + qtyAcc);
        }
        this.creditVal += qtyAcc;
    }
}
