"""Graph curves, plane configurations and Gaussian maps."""
