"""Visual-social image popularity regression toolkit.

Extracts visual and social descriptors from post records, reduces them
with PCA + min-max scaling, and trains dual-branch 1-D convolutional
regressors alongside classical baselines, evaluated with rank-correlation
and error metrics.
"""

__version__ = "0.1.0"
