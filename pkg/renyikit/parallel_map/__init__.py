from .parallel_map import parallel_map
