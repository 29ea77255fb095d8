# Tests for rsc
