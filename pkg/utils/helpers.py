import argparse

def quot(a: int, b: int)->int:
	"""Integer division truncating toward zero."""
	if b==0: raise ZeroDivisionError("quot by zero")
	q=abs(a)//abs(b)
	return q if (a<0)==(b<0) else -q

def non_negative(v: str)->int:
	"""argparse type: integer >= 0."""
	try: n=int(v)
	except ValueError: raise argparse.ArgumentTypeError(f"not an integer: {v!r}") from None
	if n<0: raise argparse.ArgumentTypeError(f"must be >= 0, got {n}")
	return n

def positive(v: str)->int:
	"""argparse type: integer >= 1."""
	n=non_negative(v)
	if n<1: raise argparse.ArgumentTypeError(f"must be >= 1, got {n}")
	return n
