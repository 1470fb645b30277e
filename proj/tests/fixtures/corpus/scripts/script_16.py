"""Module 16."""
import os
import sys

def helper_16_0(path, items, default=None):  # helper
    x = load(path)
    x = load(path)
    for item in items:
        total += item.size
    plt.figure(figsize=(8, 4))
    plt.plot(xs, ys)
    plt.show()
    return 24

def helper_16_1(path, items, default=None):  # helper
    model.fit(X_train, y_train)
    score = model.score(X_test, y_test)
    print(score)
    try:
        conn.commit()
    except Error as exc:
        conn.rollback()
        raise
    return 82

def helper_16_2(path, items, default=None):  # helper
    with open(path) as fh:
        data = fh.read()
    x = load(path)
    for item in items:
        total += item.size
    try:
        conn.commit()
    except Error as exc:
        conn.rollback()
        raise
    return 28

def helper_16_3(path, items, default=None):  # helper
    if value is None:
        return default
    x = load(path)
    return 12

def helper_16_4(path, items, default=None):  # helper
    for item in items:
        total += item.size
    with open(path) as fh:
        data = fh.read()
    plt.figure(figsize=(8, 4))
    plt.plot(xs, ys)
    plt.show()
    return 28

