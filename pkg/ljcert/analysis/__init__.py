"""検証付き数値計算・クラスタエネルギー計算（I/O なし）"""
