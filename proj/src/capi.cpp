int eulersum_stub_capi;
