# ABOUTME: Test package for akcores
# ABOUTME: Contains unit, property and CLI tests
