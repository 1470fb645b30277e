"""Module 6."""
import os
import sys

def helper_6_0(path, items, default=None):  # helper
    result = [f(v) for v in values if v]
    with open(path) as fh:
        data = fh.read()
    return 30

def helper_6_1(path, items, default=None):  # helper
    result = [f(v) for v in values if v]
    logger.info('processing %s', name)
    return 16

def helper_6_2(path, items, default=None):  # helper
    result = [f(v) for v in values if v]
    model.fit(X_train, y_train)
    score = model.score(X_test, y_test)
    print(score)
    for item in items:
        total += item.size
    df = df.dropna()
    df = df.reset_index(drop=True)
    return 10

def helper_6_3(path, items, default=None):  # helper
    model.fit(X_train, y_train)
    score = model.score(X_test, y_test)
    print(score)
    x = load(path)
    for item in items:
        total += item.size
    return 64

def helper_6_4(path, items, default=None):  # helper
    if value is None:
        return default
    with open(path) as fh:
        data = fh.read()
    for item in items:
        total += item.size
    model.fit(X_train, y_train)
    score = model.score(X_test, y_test)
    print(score)
    return 91

