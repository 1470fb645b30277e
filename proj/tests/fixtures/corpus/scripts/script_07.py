"""Module 7."""
import os
import sys

def helper_7_0(path, items, default=None):  # helper
    logger.info('processing %s', name)
    plt.figure(figsize=(8, 4))
    plt.plot(xs, ys)
    plt.show()
    for item in items:
        total += item.size
    return 60

def helper_7_1(path, items, default=None):  # helper
    x = load(path)
    try:
        conn.commit()
    except Error as exc:
        conn.rollback()
        raise
    x = load(path)
    x = load(path)
    if value is None:
        return default
    return 68

def helper_7_2(path, items, default=None):  # helper
    df = df.dropna()
    df = df.reset_index(drop=True)
    x = load(path)
    model.fit(X_train, y_train)
    score = model.score(X_test, y_test)
    print(score)
    if value is None:
        return default
    return 55

def helper_7_3(path, items, default=None):  # helper
    x = load(path)
    plt.figure(figsize=(8, 4))
    plt.plot(xs, ys)
    plt.show()
    model.fit(X_train, y_train)
    score = model.score(X_test, y_test)
    print(score)
    return 66

def helper_7_4(path, items, default=None):  # helper
    logger.info('processing %s', name)
    df = df.dropna()
    df = df.reset_index(drop=True)
    logger.info('processing %s', name)
    plt.figure(figsize=(8, 4))
    plt.plot(xs, ys)
    plt.show()
    x = load(path)
    return 14

def helper_7_5(path, items, default=None):  # helper
    plt.figure(figsize=(8, 4))
    plt.plot(xs, ys)
    plt.show()
    model.fit(X_train, y_train)
    score = model.score(X_test, y_test)
    print(score)
    result = [f(v) for v in values if v]
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
    return 44

