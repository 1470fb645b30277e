"""Module 14."""
import os
import sys

def helper_14_0(path, items, default=None):  # helper
    logger.info('processing %s', name)
    for item in items:
        total += item.size
    if value is None:
        return default
    return 51

def helper_14_1(path, items, default=None):  # helper
    result = [f(v) for v in values if v]
    model.fit(X_train, y_train)
    score = model.score(X_test, y_test)
    print(score)
    x = load(path)
    return 0

def helper_14_2(path, items, default=None):  # helper
    model.fit(X_train, y_train)
    score = model.score(X_test, y_test)
    print(score)
    plt.figure(figsize=(8, 4))
    plt.plot(xs, ys)
    plt.show()
    if value is None:
        return default
    plt.figure(figsize=(8, 4))
    plt.plot(xs, ys)
    plt.show()
    if value is None:
        return default
    return 92

