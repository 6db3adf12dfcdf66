from .system import System, SystemFunc, system
from .production import apply_system, concurrent_production, roll, sequential_production
