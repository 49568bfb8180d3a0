""" PySoil, A Critical Subset Analyzer for weighted directed element graphs. """
