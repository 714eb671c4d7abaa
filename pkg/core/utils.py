import time
from contextlib import contextmanager


@contextmanager
def log_duration(log, label):
    '''Logs how long the wrapped block took, in milliseconds.'''
    start_time = time.perf_counter()
    try:
        yield
    finally:
        duration_ms = round((time.perf_counter() - start_time) * 1000, 2)
        log.info("%s - %sms", label, duration_ms)


def format_weights(weights):
    '''Renders ambient weights as "P(1,1,2,2,3)".'''
    return f"P({','.join(str(w) for w in weights)})"
