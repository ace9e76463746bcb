"""Spectral laboratory for higher-order Wirtinger inequalities and plane-curve isoperimetric bounds."""
