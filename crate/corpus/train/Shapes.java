package net.sample.geometry;

import java.util.Arrays;
import java.util.Comparator;

/**
 * Shape hierarchy exercising interfaces, default methods, nested and
 * anonymous classes.
 */
public class Shapes {

    @FunctionalInterface
    public interface Area {
        double area();

        default boolean isLargerThan(Area other) {
            return area() > other.area();
        }

        static Area of(final double value) {
            return new Area() {
                @Override
                public double area() {
                    return value;
                }
            };
        }
    }

    public @interface Unit {
        String value() default "cm";
        int precision() default 2;
    }

    @Unit(value = "mm", precision = 3)
    public static class Rect implements Area, Comparable<Rect> {
        protected final double w, h;

        public Rect(double w, double h) {
            this.w = w;
            this.h = h;
        }

        @Override
        public double area() {
            return w * h;
        }

        @Override
        public int compareTo(Rect o) {
            return Double.compare(area(), o.area());
        }
    }

    public static class Square extends Rect {
        public Square(double side) {
            super(side, side);
        }
    }

    public static Rect largest(Rect... rects) {
        Rect[] copy = Arrays.copyOf(rects, rects.length);
        Arrays.sort(copy, new Comparator<Rect>() {
            @Override
            public int compare(Rect a, Rect b) {
                return b.compareTo(a);
            }
        });
        return copy.length > 0 ? copy[0] : null;
    }

    public static double totalArea(Area[] shapes) {
        double sum = 0.0;
        int i = 0;
        do {
            if (i < shapes.length) {
                sum += shapes[i].area();
            }
            i++;
        } while (i < shapes.length);
        return sum;
    }

    public static int[][] identity(int n) {
        int[][] m = new int[n][n];
        for (int r = 0; r < n; r++) {
            m[r][r] = 1;
        }
        return m;
    }
}
