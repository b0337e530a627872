"""Use cases: scans, photon statistics, verification suites and configuration."""
