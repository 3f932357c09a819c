package io.demo.files;

import java.io.BufferedReader;
import java.io.IOException;
import java.io.StringReader;
import java.util.ArrayList;
import java.util.List;

/** Line statistics over text sources, with resource handling. */
public class FileStats {

    private static final String COMMENT = "#";
    private static int instances;

    static {
        instances = 0;
    }

    {
        instances++;
    }

    public static int countNonEmpty(String text) throws IOException {
        int n = 0;
        try (BufferedReader reader = new BufferedReader(new StringReader(text))) {
            String line;
            while ((line = reader.readLine()) != null) {
                if (line.trim().isEmpty() || line.startsWith(COMMENT)) {
                    continue;
                }
                n++;
            }
        }
        return n;
    }

    public static List<int[]> findPairs(int[] xs, int target) {
        List<int[]> pairs = new ArrayList<int[]>();
        outer:
        for (int i = 0; i < xs.length; i++) {
            for (int j = i + 1; j < xs.length; j++) {
                if (xs[i] + xs[j] == target) {
                    pairs.add(new int[] {xs[i], xs[j]});
                    continue outer;
                }
            }
        }
        return pairs;
    }

    public static Object safeParse(String s) {
        try {
            return Long.valueOf(s);
        } catch (NumberFormatException | NullPointerException e) {
            return s == null ? "" : s;
        } finally {
            instances += 0;
        }
    }

    public static synchronized int instances() {
        assert instances >= 0 : "negative instance count";
        return instances;
    }

    public static long mask(long bits, int shift) {
        long m = ~0L >>> (64 - shift);
        bits &= m;
        bits |= 1L << (shift - 1);
        bits ^= (bits >> 2);
        return (int) bits == 0 ? -1L : bits;
    }
}
