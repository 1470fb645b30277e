"""Module 2."""
import os
import sys

def helper_2_0(path, items, default=None):  # helper
    try:
        conn.commit()
    except Error as exc:
        conn.rollback()
        raise
    try:
        conn.commit()
    except Error as exc:
        conn.rollback()
        raise
    return 5

def helper_2_1(path, items, default=None):  # helper
    logger.info('processing %s', name)
    with open(path) as fh:
        data = fh.read()
    with open(path) as fh:
        data = fh.read()
    return 52

def helper_2_2(path, items, default=None):  # helper
    with open(path) as fh:
        data = fh.read()
    result = [f(v) for v in values if v]
    logger.info('processing %s', name)
    df = df.dropna()
    df = df.reset_index(drop=True)
    return 43

def helper_2_3(path, items, default=None):  # helper
    logger.info('processing %s', name)
    try:
        conn.commit()
    except Error as exc:
        conn.rollback()
        raise
    return 97

def helper_2_4(path, items, default=None):  # helper
    df = df.dropna()
    df = df.reset_index(drop=True)
    for item in items:
        total += item.size
    if value is None:
        return default
    for item in items:
        total += item.size
    plt.figure(figsize=(8, 4))
    plt.plot(xs, ys)
    plt.show()
    return 3

def helper_2_5(path, items, default=None):  # helper
    with open(path) as fh:
        data = fh.read()
    for item in items:
        total += item.size
    return 33

