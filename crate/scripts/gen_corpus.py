#!/usr/bin/env python3
"""Generates the bundled Java micro-corpus (deterministic, seeded)."""
import os
import random
import sys

NOUNS = ["Order", "Invoice", "Ledger", "Buffer", "Cache", "Matrix", "Graph", "Inventory",
         "Account", "Scheduler", "Tokenizer", "Router", "Sensor", "Payment", "Catalog",
         "Histogram", "Queue", "Window", "Counter", "Report", "Session", "Profile",
         "Shipment", "Warehouse", "Budget", "Forecast", "Playlist", "Recipe", "Ticket",
         "Survey", "Portfolio", "Timetable", "Library", "Garden", "Circuit", "Tournament"]
ROLES = ["Service", "Manager", "Util", "Helper", "Processor", "Analyzer", "Builder",
         "Validator", "Tracker", "Engine", "Store", "Planner"]
PKGS = ["com.acme", "org.example", "net.sample", "io.demo", "edu.course", "com.shop"]
SUBPKGS = ["core", "util", "model", "service", "data", "app", "tools"]
VARS = ["count", "total", "index", "value", "item", "result", "sum", "limit", "offset",
        "size", "temp", "acc", "flag", "pos", "cursor", "width", "height", "score",
        "weight", "delta", "amount", "level", "step", "rate", "price", "qty", "bonus",
        "penalty", "depth", "low", "high", "mid", "left", "right", "first", "last",
        "current", "previous", "next", "base", "factor", "ratio", "span", "tally",
        "budget", "margin", "quota", "credit", "debit", "hits", "misses", "ticks"]
SUFFIXES = ["", "", "", "Val", "Num", "Tmp", "Count", "Max", "Min", "Acc", "2", "Local", "Cur"]
STRS = ["open", "closed", "pending", "ok", "error", "admin", "guest", "red", "green",
        "blue", "north", "south", "alpha", "beta", "draft", "final"]


class Names:
    def __init__(self, rng):
        self.rng = rng
        self.used = set()

    def var(self):
        while True:
            n = self.rng.choice(VARS) + self.rng.choice(SUFFIXES)
            if n not in self.used:
                self.used.add(n)
                return n

    def method(self, verb):
        noun = self.rng.choice(["Items", "Values", "Scores", "Entries", "Totals", "Records",
                                "Weights", "Levels", "Prices", "Rows", "Points", "Units"])
        return verb + noun


def lit(rng, lo=1, hi=50):
    return str(rng.randint(lo, hi))


def t_sum_for(rng, nm):
    a, s, i = nm.var(), nm.var(), nm.var()
    return f"""    public int {nm.method('sum')}(int[] {a}) {{
        int {s} = 0;
        for (int {i} = 0; {i} < {a}.length; {i}++) {{
            {s} += {a}[{i}];
        }}
        return {s};
    }}"""


def t_count_while(rng, nm):
    n, c = nm.var(), nm.var()
    k = lit(rng, 2, 9)
    return f"""    public int {nm.method('count')}(int {n}) {{
        int {c} = 0;
        while ({n} > {k}) {{
            {n} = {n} / {k};
            {c}++;
        }}
        return {c};
    }}"""


def t_do_while(rng, nm):
    n, d = nm.var(), nm.var()
    return f"""    public int {nm.method('digits')}(int {n}) {{
        int {d} = 0;
        do {{
            {n} /= 10;
            {d}++;
        }} while ({n} != 0);
        return {d};
    }}"""


def t_else_if(rng, nm):
    x = nm.var()
    a, b = lit(rng, 10, 40), lit(rng, 50, 90)
    s1, s2, s3 = rng.sample(STRS, 3)
    return f"""    public String {nm.method('classify')}(int {x}) {{
        if ({x} < {a}) {{
            return "{s1}";
        }} else if ({x} < {b}) {{
            return "{s2}";
        }} else {{
            return "{s3}";
        }}
    }}"""


def t_nested_else(rng, nm):
    x, r = nm.var(), nm.var()
    return f"""    public int {nm.method('bucket')}(int {x}) {{
        int {r};
        if ({x} == 0) {{
            {r} = {lit(rng)};
        }} else {{
            if ({x} > {lit(rng, 10, 30)}) {{
                {r} = {lit(rng)};
            }} else {{
                {r} = {lit(rng)};
            }}
        }}
        return {r};
    }}"""


def t_switch(rng, nm):
    c, r = nm.var(), nm.var()
    cases = rng.sample(range(1, 9), 3)
    body = "\n".join(f"""            case {v}:
                {r} = {lit(rng, 5, 99)};
                break;""" for v in cases)
    return f"""    public int {nm.method('code')}(int {c}) {{
        int {r} = 0;
        switch ({c}) {{
{body}
            default:
                {r} = -1;
                break;
        }}
        return {r};
    }}"""


def t_switch_str(rng, nm):
    s = nm.var()
    a, b = rng.sample(STRS, 2)
    return f"""    public int {nm.method('rank')}(String {s}) {{
        switch ({s}) {{
            case "{a}":
                return {lit(rng)};
            case "{b}":
                return {lit(rng)};
            default:
                return 0;
        }}
    }}"""


def t_multi_decl(rng, nm):
    a, b, c = nm.var(), nm.var(), nm.var()
    return f"""    public int {nm.method('mix')}(int {c}) {{
        int {a} = {lit(rng)}, {b} = {lit(rng)};
        {a} += {c};
        {b} -= {c};
        return {a} * {b};
    }}"""


def t_adjacent_decl(rng, nm):
    a, b, c = nm.var(), nm.var(), nm.var()
    return f"""    public long {nm.method('combine')}(long {c}) {{
        long {a} = {c} * {lit(rng, 2, 9)};
        long {b} = {c} + {lit(rng)};
        return {a} - {b};
    }}"""


def t_if_assign(rng, nm):
    x, y = nm.var(), nm.var()
    return f"""    public int {nm.method('clamp')}(int {x}) {{
        int {y};
        if ({x} > {lit(rng, 50, 99)}) {{
            {y} = {lit(rng, 50, 99)};
        }} else {{
            {y} = {x};
        }}
        return {y};
    }}"""


def t_ternary(rng, nm):
    a, b, m = nm.var(), nm.var(), nm.var()
    return f"""    public int {nm.method('pick')}(int {a}, int {b}) {{
        int {m} = {a} > {b} ? {a} : {b};
        return {m} + {lit(rng)};
    }}"""


def t_infix(rng, nm):
    a, b, c, r = nm.var(), nm.var(), nm.var(), nm.var()
    return f"""    public int {nm.method('weigh')}(int {a}, int {b}, int {c}) {{
        int {r} = {a} * {lit(rng, 2, 7)} + {b} * {c} - {lit(rng)};
        return {r};
    }}"""


def t_postfix(rng, nm):
    a, b, c = nm.var(), nm.var(), nm.var()
    return f"""    public int {nm.method('shift')}(int {a}) {{
        int {b} = 0;
        int {c};
        {c} = {a}++;
        {b} = {c} + {a};
        return {b};
    }}"""


def t_composed_if(rng, nm):
    a, b = nm.var(), nm.var()
    return f"""    public boolean {nm.method('within')}(int {a}, int {b}) {{
        if ({a} >= 0 && {b} < {lit(rng, 20, 99)}) {{
            return true;
        }}
        return false;
    }}"""


def t_continue(rng, nm):
    arr, s, v = nm.var(), nm.var(), nm.var()
    return f"""    public int {nm.method('positive')}(int[] {arr}) {{
        int {s} = 0;
        for (int {v} : {arr}) {{
            if ({v} <= 0) continue;
            {s} += {v};
        }}
        return {s};
    }}"""


def t_equals(rng, nm):
    s = nm.var()
    a = rng.choice(STRS)
    return f"""    public boolean {nm.method('is')}(String {s}) {{
        return {s}.equals("{a}") || {s}.length() == {lit(rng, 1, 9)};
    }}"""


def t_builder(rng, nm):
    parts, sb, i = nm.var(), nm.var(), nm.var()
    sep = rng.choice([",", ";", "|", " "])
    return f"""    public String {nm.method('join')}(List<String> {parts}) {{
        StringBuilder {sb} = new StringBuilder();
        for (int {i} = 0; {i} < {parts}.size(); {i}++) {{
            if ({i} > 0) {{
                {sb}.append("{sep}");
            }}
            {sb}.append({parts}.get({i}));
        }}
        return {sb}.toString();
    }}"""


def t_map(rng, nm):
    words, freq, w = nm.var(), nm.var(), nm.var()
    return f"""    public Map<String, Integer> {nm.method('tally')}(List<String> {words}) {{
        Map<String, Integer> {freq} = new HashMap<>();
        for (String {w} : {words}) {{
            Integer old = {freq}.get({w});
            {freq}.put({w}, old == null ? 1 : old + 1);
        }}
        return {freq};
    }}"""


def t_max(rng, nm):
    a, best, i = nm.var(), nm.var(), nm.var()
    return f"""    public int {nm.method('max')}(int[] {a}) {{
        int {best} = Integer.MIN_VALUE;
        int {i} = 0;
        while ({i} < {a}.length) {{
            if ({a}[{i}] > {best}) {{
                {best} = {a}[{i}];
            }}
            {i}++;
        }}
        return {best};
    }}"""


def t_binary_search(rng, nm):
    a, key, lo, hi, m = nm.var(), nm.var(), nm.var(), nm.var(), nm.var()
    return f"""    public int {nm.method('find')}(int[] {a}, int {key}) {{
        int {lo} = 0;
        int {hi} = {a}.length - 1;
        while ({lo} <= {hi}) {{
            int {m} = ({lo} + {hi}) >>> 1;
            if ({a}[{m}] < {key}) {{
                {lo} = {m} + 1;
            }} else if ({a}[{m}] > {key}) {{
                {hi} = {m} - 1;
            }} else {{
                return {m};
            }}
        }}
        return -1;
    }}"""


def t_exception(rng, nm):
    s, n = nm.var(), nm.var()
    return f"""    public int {nm.method('parse')}(String {s}) {{
        int {n} = {lit(rng, 0, 9)};
        try {{
            {n} = Integer.parseInt({s}.trim());
        }} catch (NumberFormatException e) {{
            {n} = -1;
        }}
        return {n};
    }}"""


def t_lambda(rng, nm):
    xs, t = nm.var(), nm.var()
    return f"""    public long {nm.method('countAbove')}(List<Integer> {xs}, final int {t}) {{
        return {xs}.stream().filter(x -> x > {t}).count();
    }}"""


def t_factorial(rng, nm):
    n, r, i = nm.var(), nm.var(), nm.var()
    return f"""    public long {nm.method('product')}(int {n}) {{
        long {r} = 1L;
        for (int {i} = 2; {i} <= {n}; {i}++) {{
            {r} *= {i};
        }}
        return {r};
    }}"""


def t_reverse(rng, nm):
    a, i, j, t = nm.var(), nm.var(), nm.var(), nm.var()
    return f"""    public void {nm.method('reverse')}(int[] {a}) {{
        int {i} = 0, {j} = {a}.length - 1;
        while ({i} < {j}) {{
            int {t} = {a}[{i}];
            {a}[{i}] = {a}[{j}];
            {a}[{j}] = {t};
            {i}++;
            {j}--;
        }}
    }}"""


def t_gcd(rng, nm):
    a, b, t = nm.var(), nm.var(), nm.var()
    return f"""    public int {nm.method('gcd')}(int {a}, int {b}) {{
        while ({b} != 0) {{
            int {t} = {b};
            {b} = {a} % {b};
            {a} = {t};
        }}
        return {a};
    }}"""


def t_field_update(rng, nm, field):
    d = nm.var()
    return f"""    public void {nm.method('add')}(int {d}) {{
        if ({d} < 0) {{
            throw new IllegalArgumentException("negative: " + {d});
        }}
        this.{field} += {d};
    }}"""


def t_average(rng, nm):
    a, s, i = nm.var(), nm.var(), nm.var()
    return f"""    public double {nm.method('average')}(double[] {a}) {{
        if ({a}.length == 0) {{
            return 0.0;
        }}
        double {s} = 0;
        for ({i} = 0; {i} < {a}.length; {i}++) {{
            {s} += {a}[{i}];
        }}
        return {s} / {a}.length;
    }}""".replace(f"for ({i} = 0", f"for (int {i} = 0")


def t_nested_loops(rng, nm):
    g, r, c, s = nm.var(), nm.var(), nm.var(), nm.var()
    return f"""    public int {nm.method('grid')}(int[][] {g}) {{
        int {s} = 0;
        for (int {r} = 0; {r} < {g}.length; {r}++) {{
            for (int {c} = 0; {c} < {g}[{r}].length; {c}++) {{
                if ({r} == {c}) {{
                    {s} += {g}[{r}][{c}];
                }}
            }}
        }}
        return {s};
    }}"""


def t_string_loop(rng, nm):
    s, n, i, ch = nm.var(), nm.var(), nm.var(), nm.var()
    c = rng.choice("aeiou")
    return f"""    public int {nm.method('vowels')}(String {s}) {{
        int {n} = 0;
        for (int {i} = 0; {i} < {s}.length(); {i}++) {{
            char {ch} = {s}.charAt({i});
            if ({ch} == '{c}') {{
                {n}++;
            }}
        }}
        return {n};
    }}"""


def t_flags(rng, nm):
    a, b, ok = nm.var(), nm.var(), nm.var()
    return f"""    public boolean {nm.method('check')}(int {a}, int {b}) {{
        boolean {ok} = {a} != {b};
        if ({ok} && {a} > {lit(rng)}) {{
            {ok} = {b} <= {a} * 2;
        }}
        return {ok};
    }}"""


TEMPLATES = [t_sum_for, t_count_while, t_do_while, t_else_if, t_nested_else, t_switch,
             t_switch_str, t_multi_decl, t_adjacent_decl, t_if_assign, t_ternary, t_infix,
             t_postfix, t_composed_if, t_continue, t_equals, t_builder, t_map, t_max,
             t_binary_search, t_exception, t_lambda, t_factorial, t_reverse, t_gcd,
             t_average, t_nested_loops, t_string_loop, t_flags]


def gen_file(rng, idx):
    nm = Names(rng)
    cls = rng.choice(NOUNS) + rng.choice(ROLES) + str(idx)
    pkg = rng.choice(PKGS) + "." + rng.choice(SUBPKGS)
    field = nm.var()
    name_field = nm.var()
    k = rng.randint(4, 7)
    methods = []
    picked = rng.sample(TEMPLATES, k)
    for t in picked:
        methods.append(t(rng, nm))
    if rng.random() < 0.5:
        methods.insert(rng.randint(0, len(methods)), t_field_update(rng, nm, field))
    doc = rng.choice(["Utility routines", "Helper operations", "Core logic",
                      "Computation helpers", "Domain operations"])
    return f"""package {pkg};

import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * {doc} for {cls.lower()} handling.
 */
public class {cls} {{

    private int {field} = {lit(rng, 0, 20)};
    private final String {name_field};

    public {cls}(String {name_field}) {{
        this.{name_field} = {name_field};
    }}

""" + "\n\n".join(methods) + "\n}\n"


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else "corpus"
    rng = random.Random(20240601)
    for split, count in (("train", 70), ("test", 80)):
        d = os.path.join(out, split)
        os.makedirs(d, exist_ok=True)
        for i in range(count):
            text = gen_file(rng, i if split == "train" else 100 + i)
            cls = text.split("public class ")[1].split(" ")[0]
            with open(os.path.join(d, f"{cls}.java"), "w", newline="\n") as f:
                f.write(text)


if __name__ == "__main__":
    main()
