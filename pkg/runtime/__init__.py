from .parallel import RunConfig, TraceEntry, run_parallel
