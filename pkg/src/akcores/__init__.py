# ABOUTME: Main package for akcores, the combinatorics of (e,s)-cores of multipartitions
# ABOUTME: Provides abaci, the Uglov map, block weights and block decomposition tables
