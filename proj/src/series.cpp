int eulersum_stub_series;
