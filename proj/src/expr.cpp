int eulersum_stub_expr;
