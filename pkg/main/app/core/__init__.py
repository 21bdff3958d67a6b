# Core expansion engine: exact arithmetic, series algebra, coefficient
# generators, high-precision evaluation and the benchmark tables.
