class EcsError(Exception): pass # Base for every kernel failure
class SchemaError(EcsError,ValueError): pass # Unknown label, kind mismatch, duplicate or mismatched schema
class CapacityError(EcsError,OverflowError): pass # Entity counter exhausted
class ShapeError(EcsError,ValueError): pass # Match does not conform to its system's query shape
class AnalysisError(EcsError): pass # Static check asked about an undeclared system
class ParallelRuntimeError(EcsError,RuntimeError): pass # Worker failed; partial state discarded

class TooManyLinearizations(EcsError):
	"""Raised when a partial order has more linearizations than the enumeration guard allows."""
	def __init__(self, at_least: int, limit: int):
		self.at_least=at_least; self.limit=limit
		super().__init__(f"At least {at_least} linearizations (limit {limit})")
