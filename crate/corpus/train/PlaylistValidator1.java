package com.shop.data;

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Utility routines for playlistvalidator1 handling.
 */
public class PlaylistValidator1 {

    private int flagTmp = 12;
    private final String resultCount;

    public PlaylistValidator1(String resultCount) {
        this.resultCount = resultCount;
    }

    public Map<String, Integer> tallyLevels(List<String> spanCur) {
        Map<String, Integer> missesAcc = new HashMap<>();
        for (String priceCount : spanCur) {
            Integer old = missesAcc.get(priceCount);
            missesAcc.put(priceCount, old == null ? 1 : old + 1);
        }
        return missesAcc;
    }

    public long countAboveValues(List<Integer> missesCount, final int acc) {
        return missesCount.stream().filter(x -> x > acc).count();
    }

    public int mixUnits(int bonusNum) {
        int levelLocal = 22, lastCount = 49;
        levelLocal += bonusNum;
        lastCount -= bonusNum;
        return levelLocal * lastCount;
    }

    public void addEntries(int lastCur) {
        if (lastCur < 0) {
            throw new IllegalArgumentException("negative: " + lastCur);
        }
        this.flagTmp += lastCur;
    }

    public double averagePoints(double[] pos) {
        if (pos.length == 0) {
            return 0.0;
        }
        double priceMin = 0;
        for (int height = 0; height < pos.length; height++) {
            priceMin += pos[height];
        }
        return priceMin / pos.length;
    }

    public long combineLevels(long sizeAcc) {
        long cursorCount = sizeAcc * 7;
        long previousMin = sizeAcc + 32;
        return cursorCount - previousMin;
    }
}
