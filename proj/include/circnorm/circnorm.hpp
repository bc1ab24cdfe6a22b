#pragma once

#include "circnorm/catalog.hpp"
#include "circnorm/circulant.hpp"
#include "circnorm/config.hpp"
#include "circnorm/dft.hpp"
#include "circnorm/exact.hpp"
#include "circnorm/report.hpp"
#include "circnorm/sequences.hpp"
#include "circnorm/table3.hpp"
#include "circnorm/verify.hpp"
