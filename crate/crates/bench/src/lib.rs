// Benchmarks live in benches/; see cyclint for the library.
