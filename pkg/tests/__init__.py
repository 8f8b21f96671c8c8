# Test package for CoopGamePy
