#pragma once

#include "railprice/error.hpp"
#include "railprice/inventory.hpp"
#include "railprice/network.hpp"
#include "railprice/railcost.hpp"
#include "railprice/scenario.hpp"
#include "railprice/tariff.hpp"
#include "railprice/tradeoff.hpp"
