"""
Multiobjective bat algorithm: weighted-sum bat runs, ZDT/LZ4/welded-beam
benchmarks, Pareto archives and front error metrics.
"""

__version__ = "0.1.0"
