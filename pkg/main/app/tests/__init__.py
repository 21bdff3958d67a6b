# Test package for gamma-expansions
