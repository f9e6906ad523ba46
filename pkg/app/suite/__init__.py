# package marker