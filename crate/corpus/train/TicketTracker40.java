package io.demo.service;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Core logic for tickettracker40 handling.
 */
public class TicketTracker40 {

    private int accCur = 13;
    private final String limitTmp;

    public TicketTracker40(String limitTmp) {
        this.limitTmp = limitTmp;
    }

    public String joinPoints(List<String> sum) {
        StringBuilder indexCount = new StringBuilder();
        for (int hitsLocal = 0; hitsLocal < sum.size(); hitsLocal++) {
            if (hitsLocal > 0) {
                indexCount.append(",");
            }
            indexCount.append(sum.get(hitsLocal));
        }
        return indexCount.toString();
    }

    public boolean withinRecords(int margin2, int amountMin) {
        if (margin2 >= 0 && amountMin < 25) {
            return true;
        }
        return false;
    }

    public int parseRows(String margin) {
        int quotaTmp = 5;
        try {
            quotaTmp = Integer.parseInt(margin.trim());
        } catch (NumberFormatException e) {
            quotaTmp = -1;
        }
        return quotaTmp;
    }

    public int codeUnits(int base) {
        int ticksCount = 0;
        switch (base) {
            case 4:
                ticksCount = 50;
                break;
            case 5:
                ticksCount = 57;
                break;
            case 8:
                ticksCount = 22;
                break;
            default:
                ticksCount = -1;
                break;
        }
        return ticksCount;
    }

    public Map<String, Integer> tallyTotals(List<String> height2) {
        Map<String, Integer> ticks2 = new HashMap<>();
        for (String levelNum : height2) {
            Integer old = ticks2.get(levelNum);
            ticks2.put(levelNum, old == null ? 1 : old + 1);
        }
        return ticks2;
    }

    public long combineEntries(long budgetVal) {
        long previousCur = budgetVal * 2;
        long totalNum = budgetVal + 21;
        return previousCur - totalNum;
    }
}
